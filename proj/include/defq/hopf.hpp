#pragma once

#include "defq/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace defq {

using HopfElem = std::vector<CScalar>; // coefficients over the basis

struct SweedlerTriple
{
	int left, right; // basis indices
	CScalar coeff;
};

// Finite-basis Hopf-*-algebra given by structure tables. Entries may be
// absent (nullopt) for degree-capped fixtures such as truncated U(g); the
// verifier skips instances it cannot evaluate and counts them.
struct HopfAlgebra
{
	int dim = 0;
	std::vector<std::string> labels;
	std::vector<std::vector<std::optional<HopfElem>>> mult; // [i][j]
	HopfElem unit;
	std::vector<std::optional<std::vector<SweedlerTriple>>> comult;
	std::vector<CScalar> counit;
	std::vector<std::optional<HopfElem>> antipode;
	std::vector<std::optional<HopfElem>> star; // antilinear on basis

	HopfElem zero() const { return HopfElem(dim); }
	HopfElem basis_elem(int i) const
	{
		HopfElem e(dim);
		e[i] = CScalar(1);
		return e;
	}

	static bool is_zero_elem(const HopfElem &x)
	{
		for (auto &c : x)
			if (!c.is_zero())
				return false;
		return true;
	}

	std::optional<HopfElem> product(const HopfElem &x, const HopfElem &y) const
	{
		HopfElem r(dim);
		for (int i = 0; i < dim; ++i)
		{
			if (x[i].is_zero())
				continue;
			for (int j = 0; j < dim; ++j)
			{
				if (y[j].is_zero())
					continue;
				if (!mult[i][j])
					return std::nullopt;
				const HopfElem &m = *mult[i][j];
				CScalar c = x[i] * y[j];
				for (int k = 0; k < dim; ++k)
					r[k] += c * m[k];
			}
		}
		return r;
	}

	std::optional<HopfElem> apply_antipode(const HopfElem &x) const
	{
		HopfElem r(dim);
		for (int i = 0; i < dim; ++i)
		{
			if (x[i].is_zero())
				continue;
			if (!antipode[i])
				return std::nullopt;
			for (int k = 0; k < dim; ++k)
				r[k] += x[i] * (*antipode[i])[k];
		}
		return r;
	}

	std::optional<HopfElem> apply_star(const HopfElem &x) const
	{
		HopfElem r(dim);
		for (int i = 0; i < dim; ++i)
		{
			if (x[i].is_zero())
				continue;
			if (!star[i])
				return std::nullopt;
			for (int k = 0; k < dim; ++k)
				r[k] += x[i].conj() * (*star[i])[k];
		}
		return r;
	}

	CScalar apply_counit(const HopfElem &x) const
	{
		CScalar r;
		for (int i = 0; i < dim; ++i)
			r += x[i] * counit[i];
		return r;
	}

	// Delta extended linearly; nullopt if any contributing entry is capped
	std::optional<std::vector<SweedlerTriple>> sweedler(const HopfElem &x) const
	{
		std::vector<SweedlerTriple> out;
		for (int i = 0; i < dim; ++i)
		{
			if (x[i].is_zero())
				continue;
			if (!comult[i])
				return std::nullopt;
			for (auto &t : *comult[i])
				out.push_back({t.left, t.right, x[i] * t.coeff});
		}
		return out;
	}

	// inverse of the antipode as a basis table; throws if S is singular or
	// partially defined
	std::vector<HopfElem> antipode_inverse() const
	{
		Mat S(dim, dim);
		for (int j = 0; j < dim; ++j)
		{
			if (!antipode[j])
				throw std::runtime_error("antipode is partial; no inverse table");
			for (int i = 0; i < dim; ++i)
				S(i, j) = (*antipode[j])[i];
		}
		Mat inv = mat_inverse(S);
		std::vector<HopfElem> t(dim);
		for (int j = 0; j < dim; ++j)
		{
			t[j] = HopfElem(dim);
			for (int i = 0; i < dim; ++i)
				t[j][i] = inv(i, j);
		}
		return t;
	}
};

struct HopfReport
{
	std::vector<std::string> violations;
	long checked = 0, skipped = 0;
	bool ok() const { return violations.empty(); }
};

namespace detail {

// dense coefficient tensors for tensor-square/cube computations
using Tensor2 = std::vector<CScalar>; // dim*dim
using Tensor3 = std::vector<CScalar>; // dim^3

inline bool tensor_zero(const std::vector<CScalar> &t)
{
	for (auto &c : t)
		if (!c.is_zero())
			return false;
	return true;
}

} // namespace detail

// basis-exhaustive verification of the Hopf-*-axioms; partial entries are
// skipped and counted
inline HopfReport verify_hopf(const HopfAlgebra &H)
{
	HopfReport rep;
	int m = H.dim;
	auto note = [&](bool okay, bool defined, const std::string &what) {
		if (!defined)
		{
			rep.skipped++;
			return;
		}
		rep.checked++;
		if (!okay)
			rep.violations.push_back(what);
	};

	// associativity and unit
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			for (int k = 0; k < m; ++k)
			{
				std::optional<HopfElem> l, r;
				if (H.mult[i][j])
					l = H.product(*H.mult[i][j], H.basis_elem(k));
				if (H.mult[j][k])
					r = H.product(H.basis_elem(i), *H.mult[j][k]);
				bool defined = l && r;
				note(defined && *l == *r, defined,
				     "associativity at (" + H.labels[i] + "," + H.labels[j] +
				         "," + H.labels[k] + ")");
			}
	for (int i = 0; i < m; ++i)
	{
		auto l = H.product(H.unit, H.basis_elem(i));
		auto r = H.product(H.basis_elem(i), H.unit);
		bool defined = l && r;
		note(defined && *l == H.basis_elem(i) && *r == H.basis_elem(i), defined,
		     "unit law at " + H.labels[i]);
	}

	// coassociativity: (Delta x id) Delta = (id x Delta) Delta
	for (int i = 0; i < m; ++i)
	{
		if (!H.comult[i])
		{
			rep.skipped++;
			continue;
		}
		detail::Tensor3 lhs(size_t(m) * m * m), rhs(size_t(m) * m * m);
		bool defined = true;
		for (auto &t : *H.comult[i])
		{
			if (!H.comult[t.left] || !H.comult[t.right])
			{
				defined = false;
				break;
			}
			for (auto &u : *H.comult[t.left])
				lhs[(size_t(u.left) * m + u.right) * m + t.right] +=
				    t.coeff * u.coeff;
			for (auto &u : *H.comult[t.right])
				rhs[(size_t(t.left) * m + u.left) * m + u.right] +=
				    t.coeff * u.coeff;
		}
		note(defined && lhs == rhs, defined, "coassociativity at " + H.labels[i]);
	}

	// counit laws: (eps x id) Delta = id = (id x eps) Delta
	for (int i = 0; i < m; ++i)
	{
		if (!H.comult[i])
		{
			rep.skipped++;
			continue;
		}
		HopfElem l(m), r(m);
		for (auto &t : *H.comult[i])
		{
			for (int k = 0; k < m; ++k)
			{
				l[k] += t.coeff * H.counit[t.left] *
				        (t.right == k ? CScalar(1) : CScalar());
				r[k] += t.coeff * H.counit[t.right] *
				        (t.left == k ? CScalar(1) : CScalar());
			}
		}
		note(l == H.basis_elem(i) && r == H.basis_elem(i), true,
		     "counit law at " + H.labels[i]);
	}

	// antipode law: mu(S x id)Delta = eta eps = mu(id x S)Delta
	for (int i = 0; i < m; ++i)
	{
		if (!H.comult[i])
		{
			rep.skipped++;
			continue;
		}
		HopfElem l(m), r(m);
		bool defined = true;
		for (auto &t : *H.comult[i])
		{
			auto sl = H.apply_antipode(H.basis_elem(t.left));
			auto sr = H.apply_antipode(H.basis_elem(t.right));
			if (!sl || !sr)
			{
				defined = false;
				break;
			}
			auto pl = H.product(*sl, H.basis_elem(t.right));
			auto pr = H.product(H.basis_elem(t.left), *sr);
			if (!pl || !pr)
			{
				defined = false;
				break;
			}
			for (int k = 0; k < m; ++k)
			{
				l[k] += t.coeff * (*pl)[k];
				r[k] += t.coeff * (*pr)[k];
			}
		}
		HopfElem target = H.unit;
		for (auto &c : target)
			c *= H.counit[i];
		note(defined && l == target && r == target, defined,
		     "antipode law at " + H.labels[i]);
	}

	// Delta and eps are algebra maps
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
		{
			bool defined = bool(H.mult[i][j]) && H.comult[i] && H.comult[j];
			std::optional<std::vector<SweedlerTriple>> dm;
			if (defined)
				dm = H.sweedler(*H.mult[i][j]);
			if (defined && dm)
			{
				detail::Tensor2 lhs(size_t(m) * m), rhs(size_t(m) * m);
				for (auto &t : *dm)
					lhs[size_t(t.left) * m + t.right] += t.coeff;
				bool def2 = true;
				for (auto &a : *H.comult[i])
					for (auto &b : *H.comult[j])
					{
						auto pl = H.mult[a.left][b.left];
						auto pr = H.mult[a.right][b.right];
						if (!pl || !pr)
						{
							def2 = false;
							goto donetensor;
						}
						for (int u = 0; u < m; ++u)
							for (int v = 0; v < m; ++v)
								rhs[size_t(u) * m + v] += a.coeff * b.coeff *
								                          (*pl)[u] * (*pr)[v];
					}
			donetensor:
				note(def2 && lhs == rhs, def2,
				     "Delta not multiplicative at (" + H.labels[i] + "," +
				         H.labels[j] + ")");
			}
			else
				rep.skipped++;
			if (H.mult[i][j])
				note(H.apply_counit(*H.mult[i][j]) ==
				         H.counit[i] * H.counit[j],
				     true,
				     "eps not multiplicative at (" + H.labels[i] + "," +
				         H.labels[j] + ")");
			else
				rep.skipped++;
		}

	// S is an algebra antihomomorphism: S(gh) = S(h)S(g)
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
		{
			bool defined = bool(H.mult[i][j]) && H.antipode[i] && H.antipode[j];
			std::optional<HopfElem> l, r;
			if (defined)
			{
				l = H.apply_antipode(*H.mult[i][j]);
				r = H.product(*H.antipode[j], *H.antipode[i]);
			}
			bool def2 = defined && l && r;
			note(def2 && *l == *r, def2,
			     "S not antimultiplicative at (" + H.labels[i] + "," +
			         H.labels[j] + ")");
		}

	// *-axioms: involutive antihomomorphism, Delta(h*) = (*x*)Delta(h),
	// S(S(h*)*) = h
	for (int i = 0; i < m; ++i)
	{
		auto s1 = H.apply_star(H.basis_elem(i));
		if (!s1)
		{
			rep.skipped += 3;
			continue;
		}
		auto s2 = H.apply_star(*s1);
		note(s2 && *s2 == H.basis_elem(i), bool(s2),
		     "* not involutive at " + H.labels[i]);
		if (H.comult[i])
		{
			auto ds = H.sweedler(*s1);
			bool defined = bool(ds);
			if (defined)
			{
				detail::Tensor2 lhs(size_t(m) * m), rhs(size_t(m) * m);
				for (auto &t : *ds)
					lhs[size_t(t.left) * m + t.right] += t.coeff;
				for (auto &t : *H.comult[i])
				{
					auto sl = H.apply_star(H.basis_elem(t.left));
					auto sr = H.apply_star(H.basis_elem(t.right));
					if (!sl || !sr)
					{
						defined = false;
						break;
					}
					for (int u = 0; u < m; ++u)
						for (int v = 0; v < m; ++v)
							rhs[size_t(u) * m + v] +=
							    t.coeff.conj() * (*sl)[u] * (*sr)[v];
				}
				note(defined && lhs == rhs, defined,
				     "Delta not *-compatible at " + H.labels[i]);
			}
			else
				rep.skipped++;
		}
		else
			rep.skipped++;
		// S(S(h*)*) = h
		auto a = H.apply_antipode(*s1);
		std::optional<HopfElem> b, c;
		if (a)
			b = H.apply_star(*a);
		if (b)
			c = H.apply_antipode(*b);
		note(c && *c == H.basis_elem(i), bool(c),
		     "S o * o S o * != id at " + H.labels[i]);
	}
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
		{
			bool defined = bool(H.mult[i][j]) && H.star[i] && H.star[j];
			std::optional<HopfElem> l, r;
			if (defined)
			{
				l = H.apply_star(*H.mult[i][j]);
				r = H.product(*H.star[j], *H.star[i]);
			}
			bool def2 = defined && l && r;
			note(def2 && *l == *r, def2,
			     "* not antimultiplicative at (" + H.labels[i] + "," +
			         H.labels[j] + ")");
		}

	return rep;
}

inline bool is_cocommutative(const HopfAlgebra &H)
{
	int m = H.dim;
	for (int i = 0; i < m; ++i)
	{
		if (!H.comult[i])
			continue;
		detail::Tensor2 d(size_t(m) * m), dop(size_t(m) * m);
		for (auto &t : *H.comult[i])
		{
			d[size_t(t.left) * m + t.right] += t.coeff;
			dop[size_t(t.right) * m + t.left] += t.coeff;
		}
		if (d != dop)
			return false;
	}
	return true;
}

inline bool antipode_involutive(const HopfAlgebra &H)
{
	for (int i = 0; i < H.dim; ++i)
	{
		if (!H.antipode[i])
			continue;
		auto s2 = H.apply_antipode(*H.antipode[i]);
		if (!s2 || !(*s2 == H.basis_elem(i)))
			return false;
	}
	return true;
}

struct NotAGroup : std::runtime_error
{
	NotAGroup(const std::string &w) : std::runtime_error("not a group: " + w) {}
};

// group algebra C[G] from a Cayley table (identity must be index 0):
// Delta(g) = g x g, eps(g) = 1, S(g) = g^{-1} = g*
inline HopfAlgebra group_algebra(const std::vector<std::vector<int>> &cayley,
                                 std::vector<std::string> labels = {})
{
	int m = int(cayley.size());
	std::vector<int> inv(m, -1);
	for (int i = 0; i < m; ++i)
	{
		if (int(cayley[i].size()) != m)
			throw NotAGroup("table not square");
		if (cayley[0][i] != i || cayley[i][0] != i)
			throw NotAGroup("index 0 is not an identity");
		for (int j = 0; j < m; ++j)
			if (cayley[i][j] == 0)
				inv[i] = j;
	}
	for (int i = 0; i < m; ++i)
	{
		if (inv[i] < 0 || cayley[inv[i]][i] != 0)
			throw NotAGroup("missing inverse");
		for (int j = 0; j < m; ++j)
			for (int k = 0; k < m; ++k)
				if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]])
					throw NotAGroup("associativity fails");
	}
	HopfAlgebra H;
	H.dim = m;
	if (labels.empty())
		for (int i = 0; i < m; ++i)
			labels.push_back("g" + std::to_string(i));
	H.labels = labels;
	H.mult.assign(m, std::vector<std::optional<HopfElem>>(m));
	H.comult.resize(m);
	H.counit.assign(m, CScalar(1));
	H.antipode.resize(m);
	H.star.resize(m);
	H.unit = H.basis_elem(0);
	for (int i = 0; i < m; ++i)
	{
		for (int j = 0; j < m; ++j)
			H.mult[i][j] = H.basis_elem(cayley[i][j]);
		H.comult[i] = std::vector<SweedlerTriple>{{i, i, CScalar(1)}};
		H.antipode[i] = H.basis_elem(inv[i]);
		H.star[i] = H.basis_elem(inv[i]);
	}
	return H;
}

// function algebra F(G) on the delta-function basis: pointwise product,
// Delta(delta_g) = sum_{ab=g} delta_a x delta_b, eps(f) = f(e),
// S(f)(g) = f(g^{-1}), f*(g) = conj(f(g))
inline HopfAlgebra function_algebra(const std::vector<std::vector<int>> &cayley)
{
	HopfAlgebra G = group_algebra(cayley); // validates the table
	int m = G.dim;
	HopfAlgebra H;
	H.dim = m;
	for (int i = 0; i < m; ++i)
		H.labels.push_back("d" + std::to_string(i));
	H.mult.assign(m, std::vector<std::optional<HopfElem>>(m));
	H.comult.resize(m);
	H.counit.assign(m, CScalar());
	H.antipode.resize(m);
	H.star.resize(m);
	H.unit = HopfElem(m, CScalar(1));
	std::vector<int> inv(m);
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			if (cayley[i][j] == 0)
				inv[i] = j;
	for (int i = 0; i < m; ++i)
	{
		for (int j = 0; j < m; ++j)
			H.mult[i][j] = (i == j) ? H.basis_elem(i) : H.zero();
		std::vector<SweedlerTriple> d;
		for (int a = 0; a < m; ++a)
			for (int b = 0; b < m; ++b)
				if (cayley[a][b] == i)
					d.push_back({a, b, CScalar(1)});
		H.comult[i] = std::move(d);
		H.antipode[i] = H.basis_elem(inv[i]);
		H.star[i] = H.basis_elem(i);
	}
	H.counit[0] = CScalar(1);
	return H;
}

// the canonical dual pairing <delta_g, h> on F(G) x C[G]
inline CScalar group_function_pairing(const HopfElem &f, const HopfElem &g)
{
	CScalar r;
	for (size_t i = 0; i < f.size(); ++i)
		r += f[i] * g[i];
	return r;
}

inline std::vector<std::vector<int>> cyclic_group_table(int m)
{
	std::vector<std::vector<int>> t(m, std::vector<int>(m));
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			t[i][j] = (i + j) % m;
	return t;
}

// S3 as permutations of {0,1,2}; index 0 is the identity
inline std::vector<std::vector<int>> s3_group_table()
{
	std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
	                                         {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
	auto compose = [&](int a, int b) {
		std::array<int, 3> c;
		for (int i = 0; i < 3; ++i)
			c[i] = perms[a][perms[b][i]];
		for (int k = 0; k < 6; ++k)
			if (perms[k] == c)
				return k;
		return -1;
	};
	std::vector<std::vector<int>> t(6, std::vector<int>(6));
	for (int i = 0; i < 6; ++i)
		for (int j = 0; j < 6; ++j)
			t[i][j] = compose(i, j);
	return t;
}

} // namespace defq
