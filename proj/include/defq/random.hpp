#pragma once

#include "defq/fedosov.hpp"
#include "defq/star.hpp"

#include <random>

namespace defq {

inline Rat random_rat(std::mt19937_64 &rng, long span = 5)
{
	long num = long(rng() % uint64_t(2 * span + 1)) - span;
	long den = 1 + long(rng() % 4);
	return rat(num, den);
}

inline CScalar random_cscalar(std::mt19937_64 &rng, bool complex_part = true)
{
	return CScalar(random_rat(rng), complex_part ? random_rat(rng) : Rat(0));
}

inline CSeries random_series(std::mt19937_64 &rng, size_t order)
{
	CSeries s(order);
	for (size_t j = 0; j <= order; ++j)
		if (rng() % 2)
			s.c[j] = random_cscalar(rng);
	return s;
}

// sparse random polynomial of total degree <= maxdeg with a few terms
inline StarElem random_poly(std::mt19937_64 &rng, int dim, size_t order,
                            int maxdeg, Chart chart = Chart::real,
                            int nterms = 4)
{
	StarElem f(dim, order, chart);
	for (int t = 0; t < nterms; ++t)
	{
		Monomial m(2 * dim);
		int deg = int(rng() % uint64_t(maxdeg + 1));
		for (int d = 0; d < deg; ++d)
			m.e[rng() % uint64_t(2 * dim)] += 1;
		f.add_term(m, CSeries(order, random_cscalar(rng)));
	}
	return f;
}

// random element of Sp(2n, Q) as a short product of elementary symplectic
// factors: J, diag(A, A^{-T}) for unit-triangular A, and shears
// [[I, B], [0, I]] with B symmetric
inline Mat random_symplectic(std::mt19937_64 &rng, int n, int factors = 4)
{
	int m = 2 * n;
	Mat g = Mat::identity(m);
	for (int f = 0; f < factors; ++f)
	{
		Mat s = Mat::identity(m);
		switch (rng() % 3)
		{
		case 0:
			s = LinearMap::canonical_J(n);
			break;
		case 1:
		{
			// A unit upper triangular with one rational entry
			Mat A = Mat::identity(n);
			if (n > 1)
			{
				int i = int(rng() % uint64_t(n - 1));
				A(i, i + 1) = CScalar(random_rat(rng, 2));
			}
			else
			{
				// n = 1: use an invertible diagonal scaling instead
				Rat d = random_rat(rng, 2);
				if (d == 0)
					d = 1;
				A(0, 0) = CScalar(d);
			}
			Mat Ait = mat_inverse(A).transpose();
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
				{
					s(i, j) = A(i, j);
					s(n + i, n + j) = Ait(i, j);
				}
			break;
		}
		default:
		{
			Mat B(n, n);
			int i = int(rng() % uint64_t(n)), j = int(rng() % uint64_t(n));
			CScalar v(random_rat(rng, 2));
			B(i, j) = v;
			B(j, i) = v;
			for (int a = 0; a < n; ++a)
				for (int b = 0; b < n; ++b)
					s(a, n + b) = B(a, b);
			break;
		}
		}
		g = g * s;
	}
	return g;
}

inline FiberElem random_fiber(std::mt19937_64 &rng, int n, size_t order,
                              int maxdeg = 2, int nterms = 4)
{
	FiberElem f(n, order);
	for (int t = 0; t < nterms; ++t)
	{
		FiberKey k{Monomial(2 * n), Monomial(2 * n),
		           uint32_t(rng() % (1u << (2 * n)))};
		int db = int(rng() % uint64_t(maxdeg + 1));
		for (int d = 0; d < db; ++d)
			k.base.e[rng() % uint64_t(2 * n)] += 1;
		int ds = int(rng() % uint64_t(maxdeg + 1));
		for (int d = 0; d < ds; ++d)
			k.sym.e[rng() % uint64_t(2 * n)] += 1;
		f.add_term(k, CSeries(order, random_cscalar(rng)));
	}
	return f;
}

} // namespace defq
