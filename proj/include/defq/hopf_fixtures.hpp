#pragma once

#include "defq/gutt.hpp"
#include "defq/hopf.hpp"

namespace defq {

namespace detail {

// undeformed normal ordering in U(g): xi_i xi_j -> xi_j xi_i + [xi_i, xi_j]
inline std::map<std::vector<uint32_t>, CScalar>
env_reduce_plain(const LieAlgebra &g, const Word &word)
{
	std::map<std::vector<uint32_t>, CScalar> out;
	std::map<Word, CScalar> work;
	work[word] = CScalar(1);
	while (!work.empty())
	{
		auto [w, s] = *work.begin();
		work.erase(work.begin());
		int k = -1;
		for (size_t t = 0; t + 1 < w.size(); ++t)
			if (w[t] > w[t + 1])
			{
				k = int(t);
				break;
			}
		if (k < 0)
		{
			std::vector<uint32_t> m(g.dim);
			for (int v : w)
				m[size_t(v)] += 1;
			auto &c = out[m];
			c += s;
			if (c.is_zero())
				out.erase(m);
			continue;
		}
		int i = w[size_t(k)], j = w[size_t(k) + 1];
		Word swapped = w;
		std::swap(swapped[size_t(k)], swapped[size_t(k) + 1]);
		{
			auto &c = work[swapped];
			c += s;
			if (c.is_zero())
				work.erase(swapped);
		}
		for (int l = 0; l < g.dim; ++l)
		{
			if (g.c[size_t(i)][size_t(j)][size_t(l)] == 0)
				continue;
			Word shorter;
			for (size_t t = 0; t < w.size(); ++t)
			{
				if (int(t) == k + 1)
					continue;
				shorter.push_back(int(t) == k ? l : w[t]);
			}
			auto &c = work[shorter];
			c += s * CScalar(g.c[size_t(i)][size_t(j)][size_t(l)]);
			if (c.is_zero())
				work.erase(shorter);
		}
	}
	return out;
}

inline long binom(uint32_t n, uint32_t k)
{
	long r = 1;
	for (uint32_t j = 1; j <= k; ++j)
		r = r * long(n - k + j) / long(j);
	return r;
}

} // namespace detail

// U(g) truncated at total degree D on the PBW monomial basis; products
// whose result would exceed the cap are left undefined (partial algebra)
inline HopfAlgebra truncated_enveloping(const LieAlgebra &g, int D)
{
	std::vector<std::vector<uint32_t>> basis;
	std::map<std::vector<uint32_t>, int> index;
	// enumerate exponent vectors with total degree <= D, by degree
	std::function<void(std::vector<uint32_t> &, int, int)> rec =
	    [&](std::vector<uint32_t> &cur, int pos, int left) {
		    if (pos == g.dim)
		    {
			    index[cur] = int(basis.size());
			    basis.push_back(cur);
			    return;
		    }
		    for (int k = 0; k <= left; ++k)
		    {
			    cur[size_t(pos)] = uint32_t(k);
			    rec(cur, pos + 1, left - k);
			    cur[size_t(pos)] = 0;
		    }
	    };
	std::vector<uint32_t> cur(size_t(g.dim));
	rec(cur, 0, D);

	int m = int(basis.size());
	HopfAlgebra H;
	H.dim = m;
	for (auto &b : basis)
	{
		std::string l;
		for (int v = 0; v < g.dim; ++v)
			for (uint32_t k = 0; k < b[size_t(v)]; ++k)
				l += "e" + std::to_string(v + 1);
		H.labels.push_back(l.empty() ? "1" : l);
	}
	H.unit = HopfElem(m);
	H.unit[index.at(std::vector<uint32_t>(size_t(g.dim)))] = CScalar(1);
	H.mult.assign(m, std::vector<std::optional<HopfElem>>(m));
	H.comult.resize(m);
	H.counit.assign(m, CScalar());
	H.antipode.resize(m);
	H.star.resize(m);

	auto word_of = [&](const std::vector<uint32_t> &b) {
		detail::Word w;
		for (int v = 0; v < g.dim; ++v)
			for (uint32_t k = 0; k < b[size_t(v)]; ++k)
				w.push_back(v);
		return w;
	};
	auto degree_of = [&](const std::vector<uint32_t> &b) {
		int d = 0;
		for (auto e : b)
			d += int(e);
		return d;
	};
	auto to_elem = [&](const std::map<std::vector<uint32_t>, CScalar> &poly) {
		HopfElem e(m);
		for (auto &[mono, c] : poly)
			e[index.at(mono)] = c;
		return e;
	};

	for (int i = 0; i < m; ++i)
	{
		for (int j = 0; j < m; ++j)
		{
			if (degree_of(basis[size_t(i)]) + degree_of(basis[size_t(j)]) > D)
				continue; // capped: undefined
			detail::Word w = word_of(basis[size_t(i)]);
			for (int v : word_of(basis[size_t(j)]))
				w.push_back(v);
			H.mult[size_t(i)][size_t(j)] = to_elem(detail::env_reduce_plain(g, w));
		}
		// Delta(e^a) = sum_{b <= a} prod binom(a_v, b_v) e^b (x) e^{a-b};
		// primitive generators, extended multiplicatively
		std::vector<SweedlerTriple> d;
		std::function<void(std::vector<uint32_t> &, int, long)> drec =
		    [&](std::vector<uint32_t> &low, int pos, long coeff) {
			    if (pos == g.dim)
			    {
				    std::vector<uint32_t> rest = basis[size_t(i)];
				    for (int v = 0; v < g.dim; ++v)
					    rest[size_t(v)] -= low[size_t(v)];
				    d.push_back({index.at(low), index.at(rest),
				                 CScalar(rat(coeff))});
				    return;
			    }
			    for (uint32_t k = 0; k <= basis[size_t(i)][size_t(pos)]; ++k)
			    {
				    low[size_t(pos)] = k;
				    drec(low, pos + 1,
				         coeff * detail::binom(basis[size_t(i)][size_t(pos)], k));
				    low[size_t(pos)] = 0;
			    }
		    };
		std::vector<uint32_t> low(size_t(g.dim));
		drec(low, 0, 1);
		H.comult[size_t(i)] = std::move(d);
		H.counit[size_t(i)] =
		    degree_of(basis[size_t(i)]) == 0 ? CScalar(1) : CScalar();
		// S and * both reverse the word; S(xi) = -xi and xi* = -xi
		detail::Word w = word_of(basis[size_t(i)]);
		std::reverse(w.begin(), w.end());
		auto red = detail::env_reduce_plain(g, w);
		if (w.size() % 2)
			for (auto &[mono, c] : red)
				c = -c;
		H.antipode[size_t(i)] = to_elem(red);
		H.star[size_t(i)] = H.antipode[size_t(i)]; // real structure constants
	}
	return H;
}

// Degree-capped Sweedler-type fixture at a real deformation value q:
// generators g (group-like, invertible) and X with X g = q g X,
// Delta(X) = X (x) 1 + g (x) X, S(g) = g^{-1}, S(X) = -g^{-1} X.
// Basis g^a X^b with |a| <= gcap, 0 <= b <= xcap; products leaving the
// window are undefined. Not cocommutative; S^2(X) = q X != X.
// No compatible *-structure is installed (star left undefined).
inline HopfAlgebra q_deformed_fixture(const Rat &q, int gcap = 3, int xcap = 2)
{
	int gspan = 2 * gcap + 1;
	int m = gspan * (xcap + 1);
	auto idx = [&](int a, int b) { return (a + gcap) * (xcap + 1) + b; };
	HopfAlgebra H;
	H.dim = m;
	H.labels.resize(size_t(m));
	for (int a = -gcap; a <= gcap; ++a)
		for (int b = 0; b <= xcap; ++b)
		{
			std::string l;
			if (a != 0)
				l += "g^" + std::to_string(a);
			if (b != 0)
				l += (l.empty() ? "" : " ") + std::string("X^") + std::to_string(b);
			H.labels[size_t(idx(a, b))] = l.empty() ? "1" : l;
		}
	H.unit = HopfElem(m);
	H.unit[size_t(idx(0, 0))] = CScalar(1);
	H.mult.assign(m, std::vector<std::optional<HopfElem>>(m));
	H.comult.resize(m);
	H.counit.assign(m, CScalar());
	H.antipode.resize(m);
	H.star.resize(m); // all undefined

	// (g^a X^b)(g^c X^d) = q^{bc} g^{a+c} X^{b+d}
	for (int a = -gcap; a <= gcap; ++a)
		for (int b = 0; b <= xcap; ++b)
			for (int c = -gcap; c <= gcap; ++c)
				for (int d = 0; d <= xcap; ++d)
				{
					if (std::abs(a + c) > gcap || b + d > xcap)
						continue;
					HopfElem e(m);
					e[size_t(idx(a + c, b + d))] = CScalar(rat_pow(q, b * c));
					H.mult[size_t(idx(a, b))][size_t(idx(c, d))] = std::move(e);
				}

	// Delta via the q-binomial expansion of (X (x) 1 + g (x) X)^b times
	// Delta(g)^a = g^a (x) g^a:
	//   Delta(X^b) = sum_k qbinom(b,k) g^k X^{b-k} (x) X^k
	auto qint = [&](int n) -> Rat {
		Rat r = 0, p = 1;
		for (int j = 0; j < n; ++j)
		{
			r += p;
			p *= q;
		}
		return r;
	};
	auto qbinom = [&](int n, int k) -> Rat {
		Rat num = 1, den = 1;
		for (int j = 0; j < k; ++j)
		{
			num *= qint(n - j);
			den *= qint(j + 1);
		}
		return num / den;
	};
	for (int a = -gcap; a <= gcap; ++a)
		for (int b = 0; b <= xcap; ++b)
		{
			bool ok = true;
			std::vector<SweedlerTriple> d;
			for (int k = 0; k <= b && ok; ++k)
			{
				if (std::abs(a + k) > gcap)
				{
					ok = false; // left leg leaves the window
					break;
				}
				d.push_back({idx(a + k, b - k), idx(a, k),
				             CScalar(qbinom(b, k))});
			}
			if (ok)
				H.comult[size_t(idx(a, b))] = std::move(d);
			H.counit[size_t(idx(a, b))] = b == 0 ? CScalar(1) : CScalar();
			// S(g^a X^b) = S(X)^b S(g)^a = (-g^{-1}X)^b g^{-a}
			// (-g^{-1}X)^b = (-1)^b q^{-b(b-1)/2... } handled by direct product
			{
				// build by repeated multiplication inside the window
				std::optional<HopfElem> acc = H.unit;
				HopfElem sx(m);
				if (gcap >= 1)
					sx[size_t(idx(-1, 1))] = CScalar(-1);
				for (int t = 0; t < b && acc; ++t)
				{
					std::optional<HopfElem> next;
					// acc * sx via the table
					HopfElem r(m);
					bool defined = true;
					for (int u = 0; u < m && defined; ++u)
					{
						if ((*acc)[size_t(u)].is_zero())
							continue;
						for (int v = 0; v < m; ++v)
						{
							if (sx[size_t(v)].is_zero())
								continue;
							if (!H.mult[size_t(u)][size_t(v)])
							{
								defined = false;
								break;
							}
							for (int w = 0; w < m; ++w)
								r[size_t(w)] += (*acc)[size_t(u)] *
								                sx[size_t(v)] *
								                (*H.mult[size_t(u)][size_t(v)])[size_t(w)];
						}
					}
					if (defined)
						next = std::move(r);
					acc = std::move(next);
				}
				if (acc && std::abs(a) <= gcap)
				{
					HopfElem ga(m);
					ga[size_t(idx(-a, 0))] = CScalar(1);
					HopfElem r(m);
					bool defined = true;
					for (int u = 0; u < m && defined; ++u)
					{
						if ((*acc)[size_t(u)].is_zero())
							continue;
						if (!H.mult[size_t(u)][size_t(idx(-a, 0))])
						{
							defined = false;
							break;
						}
						for (int w = 0; w < m; ++w)
							r[size_t(w)] += (*acc)[size_t(u)] *
							                (*H.mult[size_t(u)][size_t(idx(-a, 0))])[size_t(w)];
					}
					if (defined)
						H.antipode[size_t(idx(a, b))] = std::move(r);
				}
			}
		}
	return H;
}

} // namespace defq
