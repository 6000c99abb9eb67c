#pragma once

#include "defq/hopf.hpp"
#include "defq/star.hpp"

namespace defq {

// Finite-basis *-algebra with total structure tables. The uniform context
// interface (zero/unit/add/scale/mul/star_of/eq) is shared with the Weyl
// context below so actions and crossed products are generic over both.
struct TableAlgebra
{
	using Elem = std::vector<CScalar>;

	int dim = 0;
	std::vector<std::string> labels;
	std::vector<std::vector<Elem>> mult_tab;
	Elem unit_vec;
	std::vector<Elem> star_tab;

	Elem zero() const { return Elem(size_t(dim)); }
	Elem unit() const { return unit_vec; }
	Elem basis_elem(int i) const
	{
		Elem e(static_cast<size_t>(dim));
		e[size_t(i)] = CScalar(1);
		return e;
	}

	bool is_zero(const Elem &a) const
	{
		for (auto &c : a)
			if (!c.is_zero())
				return false;
		return true;
	}
	bool eq(const Elem &a, const Elem &b) const
	{
		for (size_t i = 0; i < a.size(); ++i)
			if (!(a[i] == b[i]))
				return false;
		return true;
	}
	Elem add(const Elem &a, const Elem &b) const
	{
		Elem r = a;
		for (size_t i = 0; i < r.size(); ++i)
			r[i] += b[i];
		return r;
	}
	Elem sub(const Elem &a, const Elem &b) const
	{
		Elem r = a;
		for (size_t i = 0; i < r.size(); ++i)
			r[i] -= b[i];
		return r;
	}
	Elem scale(const Elem &a, const CScalar &c) const
	{
		Elem r = a;
		for (auto &x : r)
			x *= c;
		return r;
	}
	Elem mul(const Elem &a, const Elem &b) const
	{
		Elem r(static_cast<size_t>(dim));
		for (int i = 0; i < dim; ++i)
		{
			if (a[size_t(i)].is_zero())
				continue;
			for (int j = 0; j < dim; ++j)
			{
				if (b[size_t(j)].is_zero())
					continue;
				CScalar c = a[size_t(i)] * b[size_t(j)];
				for (int k = 0; k < dim; ++k)
					r[size_t(k)] += c * mult_tab[size_t(i)][size_t(j)][size_t(k)];
			}
		}
		return r;
	}
	Elem star_of(const Elem &a) const
	{
		Elem r(static_cast<size_t>(dim));
		for (int i = 0; i < dim; ++i)
		{
			if (a[size_t(i)].is_zero())
				continue;
			for (int k = 0; k < dim; ++k)
				r[size_t(k)] += a[size_t(i)].conj() * star_tab[size_t(i)][size_t(k)];
		}
		return r;
	}

	// two-sided inverse by solving left multiplication L_a x = 1
	Elem invert(const Elem &a) const
	{
		Mat L(dim, dim);
		for (int j = 0; j < dim; ++j)
		{
			Elem col = mul(a, basis_elem(j));
			for (int i = 0; i < dim; ++i)
				L(i, j) = col[size_t(i)];
		}
		Mat inv = mat_inverse(L); // throws SingularMatrix when a is not invertible
		Elem r(static_cast<size_t>(dim));
		for (int i = 0; i < dim; ++i)
		{
			for (int k = 0; k < dim; ++k)
				r[size_t(i)] += inv(i, k) * unit_vec[size_t(k)];
		}
		return r;
	}

	bool is_central(const Elem &a) const
	{
		for (int i = 0; i < dim; ++i)
			if (!eq(mul(a, basis_elem(i)), mul(basis_elem(i), a)))
				return false;
		return true;
	}

	// the underlying algebra of a Hopf algebra; requires total tables
	static TableAlgebra from_hopf(const HopfAlgebra &H)
	{
		TableAlgebra A;
		A.dim = H.dim;
		A.labels = H.labels;
		A.unit_vec = H.unit;
		A.mult_tab.assign(size_t(H.dim), std::vector<Elem>(size_t(H.dim)));
		A.star_tab.resize(size_t(H.dim));
		for (int i = 0; i < H.dim; ++i)
		{
			for (int j = 0; j < H.dim; ++j)
			{
				if (!H.mult[size_t(i)][size_t(j)])
					throw std::runtime_error(
					    "partial Hopf algebra cannot back a TableAlgebra");
				A.mult_tab[size_t(i)][size_t(j)] = *H.mult[size_t(i)][size_t(j)];
			}
			if (!H.star[size_t(i)])
				throw std::runtime_error(
				    "partial *-table cannot back a TableAlgebra");
			A.star_tab[size_t(i)] = *H.star[size_t(i)];
		}
		return A;
	}

	// M_n over Q(i) on the matrix-unit basis E_ab (index a*n + b),
	// (z_ij)* = conj(z_ji)
	static TableAlgebra matrix_algebra(int n)
	{
		TableAlgebra A;
		A.dim = n * n;
		A.mult_tab.assign(size_t(A.dim), std::vector<Elem>(size_t(A.dim)));
		A.star_tab.resize(size_t(A.dim));
		A.unit_vec = Elem(size_t(A.dim));
		for (int a = 0; a < n; ++a)
		{
			A.unit_vec[size_t(a * n + a)] = CScalar(1);
			for (int b = 0; b < n; ++b)
			{
				A.labels.push_back("E" + std::to_string(a + 1) +
				                   std::to_string(b + 1));
				Elem st(size_t(A.dim));
				st[size_t(b * n + a)] = CScalar(1);
				A.star_tab[size_t(a * n + b)] = std::move(st);
			}
		}
		for (int i = 0; i < A.dim; ++i)
			for (int j = 0; j < A.dim; ++j)
			{
				Elem r(size_t(A.dim));
				int a = i / n, b = i % n, c = j / n, d = j % n;
				if (b == c)
					r[size_t(a * n + d)] = CScalar(1);
				A.mult_tab[size_t(i)][size_t(j)] = std::move(r);
			}
		return A;
	}

	static TableAlgebra scalars()
	{
		TableAlgebra A;
		A.dim = 1;
		A.labels = {"1"};
		A.mult_tab = {{{CScalar(1)}}};
		A.unit_vec = {CScalar(1)};
		A.star_tab = {{CScalar(1)}};
		return A;
	}
};

// Star-polynomial algebra context: elements are StarElems multiplied with a
// fixed star product; the involution is complex conjugation (an
// antiautomorphism for Hermitian products such as Weyl)
struct WeylAlgebra
{
	using Elem = StarElem;

	StarSpec spec = StarSpec::weyl();
	int n = 1;
	size_t order = 4;

	Elem zero() const { return StarElem(n, order, chart()); }
	Elem unit() const { return StarElem::one(n, order, chart()); }
	Chart chart() const
	{
		return spec.needs_complex_chart() ? Chart::complex : Chart::real;
	}

	bool is_zero(const Elem &a) const { return a.is_zero(); }
	bool eq(const Elem &a, const Elem &b) const { return a == b; }
	Elem add(const Elem &a, const Elem &b) const { return a + b; }
	Elem sub(const Elem &a, const Elem &b) const { return a - b; }
	Elem scale(const Elem &a, const CScalar &c) const { return a.scaled(c); }
	Elem mul(const Elem &a, const Elem &b) const { return star(spec, a, b); }
	Elem star_of(const Elem &a) const { return conj(a); }
};

} // namespace defq
