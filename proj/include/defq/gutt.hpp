#pragma once

#include "defq/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace defq {

struct BadLieAlgebra : std::runtime_error
{
	BadLieAlgebra(const std::string &w)
	    : std::runtime_error("Lie algebra tables invalid: " + w)
	{
	}
};

// finite-dimensional Lie algebra over Q given by structure constants;
// antisymmetry and Jacobi are checked at construction
struct LieAlgebra
{
	int dim = 0;
	// c[i][j][k] = coefficient of e_k in [e_i, e_j]
	std::vector<std::vector<std::vector<Rat>>> c;

	LieAlgebra() = default;
	LieAlgebra(int d, std::vector<std::vector<std::vector<Rat>>> table)
	    : dim(d), c(std::move(table))
	{
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j)
				for (int k = 0; k < dim; ++k)
					if (c[i][j][k] != -c[j][i][k])
						throw BadLieAlgebra("antisymmetry fails");
		// [[e_i,e_j],e_k] + cyclic = 0
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j)
				for (int k = 0; k < dim; ++k)
					for (int m = 0; m < dim; ++m)
					{
						Rat s = 0;
						for (int l = 0; l < dim; ++l)
							s += c[i][j][l] * c[l][k][m] +
							     c[j][k][l] * c[l][i][m] +
							     c[k][i][l] * c[l][j][m];
						if (s != 0)
							throw BadLieAlgebra("Jacobi fails");
					}
	}

	static LieAlgebra abelian(int d)
	{
		return LieAlgebra(
		    d, std::vector(d, std::vector(d, std::vector<Rat>(d, Rat(0)))));
	}

	// [e1,e2] = e3, rest zero
	static LieAlgebra heisenberg()
	{
		auto t = std::vector(3, std::vector(3, std::vector<Rat>(3, Rat(0))));
		t[0][1][2] = 1;
		t[1][0][2] = -1;
		return LieAlgebra(3, std::move(t));
	}

	// rational form of sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h
	// (basis order e=0, f=1, h=2)
	static LieAlgebra sl2()
	{
		auto t = std::vector(3, std::vector(3, std::vector<Rat>(3, Rat(0))));
		t[2][0][0] = 2;
		t[0][2][0] = -2;
		t[2][1][1] = -2;
		t[1][2][1] = 2;
		t[0][1][2] = 1;
		t[1][0][2] = -1;
		return LieAlgebra(3, std::move(t));
	}

	// 3-dim solvable: [e1,e2] = e2, [e1,e3] = e3, [e2,e3] = 0
	static LieAlgebra solvable3()
	{
		auto t = std::vector(3, std::vector(3, std::vector<Rat>(3, Rat(0))));
		t[0][1][1] = 1;
		t[1][0][1] = -1;
		t[0][2][2] = 1;
		t[2][0][2] = -1;
		return LieAlgebra(3, std::move(t));
	}
};

// commutative polynomial on g* (and, via PBW, normal-ordered element of
// U_lambda): ordered exponent vector -> truncated series coefficient
struct PBWPoly
{
	int dim = 0;
	size_t order = 0;
	std::map<std::vector<uint32_t>, CSeries> terms;

	PBWPoly() = default;
	PBWPoly(int d, size_t ord) : dim(d), order(ord) {}

	bool is_zero() const { return terms.empty(); }

	void add_term(const std::vector<uint32_t> &m, const CSeries &s)
	{
		if (s.is_zero())
			return;
		auto it = terms.find(m);
		if (it == terms.end())
			terms.emplace(m, s);
		else
		{
			it->second += s;
			if (it->second.is_zero())
				terms.erase(it);
		}
	}

	static PBWPoly generator(const LieAlgebra &g, size_t ord, int i)
	{
		PBWPoly p(g.dim, ord);
		std::vector<uint32_t> m(g.dim);
		m[i] = 1;
		p.add_term(m, CSeries(ord, CScalar(1)));
		return p;
	}

	friend PBWPoly operator+(const PBWPoly &a, const PBWPoly &b)
	{
		PBWPoly r = a;
		for (auto &[m, s] : b.terms)
			r.add_term(m, s);
		return r;
	}
	friend PBWPoly operator-(const PBWPoly &a, const PBWPoly &b)
	{
		PBWPoly r = a;
		for (auto &[m, s] : b.terms)
			r.add_term(m, -s);
		return r;
	}
	// commutative product on Pol(g*)
	friend PBWPoly operator*(const PBWPoly &a, const PBWPoly &b)
	{
		PBWPoly r(a.dim, a.order);
		for (auto &[ma, sa] : a.terms)
			for (auto &[mb, sb] : b.terms)
			{
				std::vector<uint32_t> m = ma;
				for (size_t i = 0; i < m.size(); ++i)
					m[i] += mb[i];
				r.add_term(m, sa * sb);
			}
		return r;
	}
	friend bool operator==(const PBWPoly &a, const PBWPoly &b)
	{
		return (a - b).is_zero();
	}

	PBWPoly scaled(const CSeries &s) const
	{
		PBWPoly r(dim, order);
		for (auto &[m, t] : terms)
			r.add_term(m, t * s);
		return r;
	}

	int degree() const
	{
		int d = 0;
		for (auto &[m, s] : terms)
		{
			int t = 0;
			for (auto e : m)
				t += int(e);
			d = std::max(d, t);
		}
		return d;
	}

	std::optional<size_t> lambda_order() const
	{
		std::optional<size_t> o;
		for (auto &[m, s] : terms)
		{
			auto so = s.order();
			if (so && (!o || *so < *o))
				o = so;
		}
		return o;
	}
};

namespace detail {

// word in the free algebra with series coefficients
using Word = std::vector<int>;
using WordElem = std::map<Word, CSeries>;

inline void word_add(WordElem &w, const Word &word, const CSeries &s)
{
	if (s.is_zero())
		return;
	auto it = w.find(word);
	if (it == w.end())
		w.emplace(word, s);
	else
	{
		it->second += s;
		if (it->second.is_zero())
			w.erase(it);
	}
}

} // namespace detail

// PBW rewriting xi_i xi_j -> xi_j xi_i + lambda [xi_i, xi_j] for i > j,
// iterated to the normal-ordered form. pick_descent selects which adjacent
// descent to resolve; the default leftmost-first strategy is confluent with
// any other choice (tested), per Poincare-Birkhoff-Witt.
inline PBWPoly pbw_reduce(const LieAlgebra &g, const detail::Word &word,
                          size_t order,
                          const std::function<int(const std::vector<int> &)>
                              &pick_descent = {})
{
	PBWPoly out(g.dim, order);
	detail::WordElem work;
	detail::word_add(work, word, CSeries(order, CScalar(1)));
	while (!work.empty())
	{
		auto [w, s] = *work.begin();
		work.erase(work.begin());
		std::vector<int> descents;
		for (size_t k = 0; k + 1 < w.size(); ++k)
			if (w[k] > w[k + 1])
				descents.push_back(int(k));
		if (descents.empty())
		{
			std::vector<uint32_t> m(g.dim);
			for (int v : w)
				m[size_t(v)] += 1;
			out.add_term(m, s);
			continue;
		}
		int k = pick_descent ? pick_descent(descents) : descents[0];
		int i = w[size_t(k)], j = w[size_t(k) + 1];
		detail::Word swapped = w;
		std::swap(swapped[size_t(k)], swapped[size_t(k) + 1]);
		detail::word_add(work, swapped, s);
		// lambda [xi_i, xi_j] in place of the pair
		for (int l = 0; l < g.dim; ++l)
		{
			if (g.c[size_t(i)][size_t(j)][size_t(l)] == 0)
				continue;
			detail::Word shorter;
			shorter.reserve(w.size() - 1);
			for (size_t t = 0; t < w.size(); ++t)
			{
				if (int(t) == k + 1)
					continue;
				shorter.push_back(int(t) == k ? l : w[t]);
			}
			CSeries coeff = CSeries::lambda_power(
			    order, 1, CScalar(g.c[size_t(i)][size_t(j)][size_t(l)]));
			detail::word_add(work, shorter, s * coeff);
		}
	}
	return out;
}

// product in U_lambda of two normal-ordered elements: concatenate the
// exponent words and reduce back to normal order
inline PBWPoly env_product(const LieAlgebra &g, const PBWPoly &a,
                           const PBWPoly &b)
{
	PBWPoly r(g.dim, a.order);
	for (auto &[ma, sa] : a.terms)
		for (auto &[mb, sb] : b.terms)
		{
			detail::Word w;
			for (int v = 0; v < g.dim; ++v)
				for (uint32_t k = 0; k < ma[size_t(v)]; ++k)
					w.push_back(v);
			for (int v = 0; v < g.dim; ++v)
				for (uint32_t k = 0; k < mb[size_t(v)]; ++k)
					w.push_back(v);
			r = r + pbw_reduce(g, w, a.order).scaled(sa * sb);
		}
	return r;
}

// symmetrization of one ordered monomial: the average in U_lambda over all
// permutations of its letters, in normal-ordered coordinates
inline PBWPoly symmetrize_monomial(const LieAlgebra &g,
                                   const std::vector<uint32_t> &m, size_t order)
{
	detail::Word w;
	for (int v = 0; v < g.dim; ++v)
		for (uint32_t k = 0; k < m[size_t(v)]; ++k)
			w.push_back(v);
	std::sort(w.begin(), w.end());
	PBWPoly acc(g.dim, order);
	long count = 0;
	do
	{
		acc = acc + pbw_reduce(g, w, order);
		++count;
	} while (std::next_permutation(w.begin(), w.end()));
	return acc.scaled(CSeries(order, CScalar(rat(1, count))));
}

inline PBWPoly symmetrize(const LieAlgebra &g, const PBWPoly &f)
{
	PBWPoly r(g.dim, f.order);
	for (auto &[m, s] : f.terms)
		r = r + symmetrize_monomial(g, m, f.order).scaled(s);
	return r;
}

// inverse of the PBW symmetrization, degree by degree: the leading
// (top-degree) part of sym(x^a) is x^a itself, the corrections carry
// lambda and strictly lower polynomial degree
inline PBWPoly desymmetrize(const LieAlgebra &g, PBWPoly u)
{
	PBWPoly out(g.dim, u.order);
	while (!u.is_zero())
	{
		int d = u.degree();
		PBWPoly top(g.dim, u.order);
		for (auto &[m, s] : u.terms)
		{
			int t = 0;
			for (auto e : m)
				t += int(e);
			if (t == d)
				top.add_term(m, s);
		}
		out = out + top;
		u = u - symmetrize(g, top);
	}
	return out;
}

// the Gutt star product on Pol(g*)[[lambda]], transported from U_lambda
// through the symmetrization isomorphism
inline PBWPoly gutt_star(const LieAlgebra &g, const PBWPoly &f,
                         const PBWPoly &h)
{
	return desymmetrize(g, env_product(g, symmetrize(g, f), symmetrize(g, h)));
}

struct MomentumReport
{
	PBWPoly defect;
	std::optional<size_t> defect_order;   // nullopt: defect vanishes
	std::optional<size_t> bracket_order;  // lambda-order of c' J([xi,eta]) term
};

// defect of the equivariance identity
//   J(xi) * J(eta) - J(eta) * J(xi) - c lambda J([xi,eta])
// for J = id into the Gutt algebra; c is explicit because conventions with
// lambda and i lambda both occur in the literature
inline MomentumReport momentum_identity_check(const LieAlgebra &g, int xi,
                                              int eta, const CScalar &c,
                                              size_t order)
{
	PBWPoly jx = PBWPoly::generator(g, order, xi);
	PBWPoly je = PBWPoly::generator(g, order, eta);
	PBWPoly comm = gutt_star(g, jx, je) - gutt_star(g, je, jx);
	PBWPoly jbr(g.dim, order);
	for (int l = 0; l < g.dim; ++l)
		if (g.c[size_t(xi)][size_t(eta)][size_t(l)] != 0)
		{
			std::vector<uint32_t> m(g.dim);
			m[size_t(l)] = 1;
			jbr.add_term(
			    m, CSeries(order, CScalar(g.c[size_t(xi)][size_t(eta)][size_t(l)])));
		}
	MomentumReport rep;
	rep.defect = comm - jbr.scaled(CSeries::lambda_power(order, 1, c));
	rep.defect_order = rep.defect.lambda_order();
	rep.bracket_order = jbr.lambda_order();
	return rep;
}

// random word over the generators, for confluence trials
inline detail::Word random_word(std::mt19937_64 &rng, int dim, int len)
{
	detail::Word w(size_t(len), 0);
	for (auto &v : w)
		v = int(rng() % uint64_t(dim));
	return w;
}

} // namespace defq
