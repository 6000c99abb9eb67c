#pragma once

#include "defq/star.hpp"

namespace defq {

struct IndefiniteGram : std::runtime_error
{
	IndefiniteGram() : std::runtime_error("gram matrix is not positive semidefinite")
	{
	}
};

// finite inner-product space over Q(i): <phi, psi> = phi^H G psi
struct InnerProdSpace
{
	Mat gram;

	explicit InnerProdSpace(Mat g) : gram(std::move(g))
	{
		assert(gram == gram.conj_transpose());
	}

	static InnerProdSpace standard(int k)
	{
		return InnerProdSpace(Mat::identity(k));
	}

	int dim() const { return gram.rows; }

	CScalar inner(const std::vector<CScalar> &phi,
	              const std::vector<CScalar> &psi) const
	{
		CScalar r;
		for (int i = 0; i < dim(); ++i)
			for (int j = 0; j < dim(); ++j)
				r += phi[size_t(i)].conj() * gram(i, j) * psi[size_t(j)];
		return r;
	}
};

// <phi,phi><psi,psi> - <phi,psi><psi,phi>, guaranteed >= 0 on PSD grams
inline Rat cauchy_schwarz_gap(const InnerProdSpace &sp,
                              const std::vector<CScalar> &phi,
                              const std::vector<CScalar> &psi)
{
	if (!mat_is_psd(sp.gram))
		throw IndefiniteGram();
	CScalar gap = sp.inner(phi, phi) * sp.inner(psi, psi) -
	              sp.inner(phi, psi) * sp.inner(psi, phi);
	assert(gap.is_real());
	return gap.re;
}

// adjoint of A: (target, source) spaces with invertible grams:
// <A phi, psi>_2 = <phi, A* psi>_1  =>  A* = G1^{-1} A^H G2
inline Mat adjoint(const Mat &A, const InnerProdSpace &source,
                   const InnerProdSpace &target)
{
	return mat_inverse(source.gram) * A.conj_transpose() * target.gram;
}

// Theta_{phi,psi}: chi -> phi <psi, chi>, as a matrix
inline Mat rank_one(const InnerProdSpace &sp, const std::vector<CScalar> &phi,
                    const std::vector<CScalar> &psi)
{
	int k = sp.dim();
	Mat r(k, k);
	for (int i = 0; i < k; ++i)
		for (int j = 0; j < k; ++j)
		{
			CScalar row;
			for (int l = 0; l < k; ++l)
				row += psi[size_t(l)].conj() * sp.gram(l, j);
			r(i, j) = phi[size_t(i)] * row;
		}
	return r;
}

// Induced inner product on E (x) F for the standard Morita pair
// E = rows of length n over B = M_n (with <x1,x2>_B = x1^H x2) and
// F = columns of length n over A = Q(i) (with <y1,y2>_A = y1^H y2):
//   <x1 (x) y1, x2 (x) y2> = <y1, <x1,x2>_B y2>_A.
// Elements of E (x) F are n x n coefficient matrices over the basis
// e_a (x) e_b.
inline CScalar induced_inner(const Mat &T1, const Mat &T2)
{
	assert(T1.rows == T2.rows && T1.cols == T2.cols);
	int n = T1.rows;
	CScalar r;
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
			for (int c = 0; c < n; ++c)
				for (int d = 0; d < n; ++d)
				{
					if (T1(a, b).is_zero() || T2(c, d).is_zero())
						continue;
					// <e_a,e_c>_B = E_ac; <e_b, E_ac e_d>_A = delta_ab delta_cd
					if (b == a && c == d)
						r += T1(a, b).conj() * T2(c, d);
				}
	return r;
}

// basis of the degenerate subspace {u : <u, v> = 0 for all v} of E (x) F,
// as coefficient vectors over the n^2 basis pairs
inline std::vector<std::vector<CScalar>> induced_degenerate_space(int n)
{
	Mat G(n * n, n * n);
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
			for (int c = 0; c < n; ++c)
				for (int d = 0; d < n; ++d)
				{
					Mat T1(n, n), T2(n, n);
					T1(a, b) = CScalar(1);
					T2(c, d) = CScalar(1);
					G(a * n + b, c * n + d) = induced_inner(T1, T2);
				}
	return mat_kernel(G);
}

struct NotIdempotent : std::runtime_error
{
	NotIdempotent() : std::runtime_error("matrix is not idempotent") {}
};

// fullness of an idempotent P in M_n: the span of {E_ab P E_cd} must be
// all of M_n
inline bool is_full_idempotent(const Mat &P)
{
	assert(P.rows == P.cols);
	int n = P.rows;
	if (!(P * P == P))
		throw NotIdempotent();
	Mat span(n * n * n * n, n * n); // one row per generator
	int row = 0;
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
			for (int c = 0; c < n; ++c)
				for (int d = 0; d < n; ++d)
				{
					// E_ab P E_cd = P_bc E_ad
					span(row, a * n + d) = P(b, c);
					++row;
				}
	return mat_rank(span) == n * n;
}

// ---------------------------------------------------------------------------
// matrices over the star-polynomial algebra

struct StarMat
{
	int n = 0;
	StarSpec spec;
	std::vector<StarElem> a; // row-major

	StarMat() = default;
	StarMat(int size, StarSpec sp, int dim, size_t order)
	    : n(size), spec(sp),
	      a(size_t(size) * size,
	        StarElem(dim, order,
	                 sp.needs_complex_chart() ? Chart::complex : Chart::real))
	{
	}

	StarElem &operator()(int i, int j) { return a[size_t(i) * n + j]; }
	const StarElem &operator()(int i, int j) const
	{
		return a[size_t(i) * n + j];
	}

	static StarMat identity(int size, StarSpec sp, int dim, size_t order)
	{
		StarMat m(size, sp, dim, order);
		for (int i = 0; i < size; ++i)
			m(i, i) = StarElem::one(dim, order,
			                        sp.needs_complex_chart() ? Chart::complex
			                                                 : Chart::real);
		return m;
	}

	friend StarMat operator+(const StarMat &x, const StarMat &y)
	{
		StarMat r = x;
		for (size_t k = 0; k < r.a.size(); ++k)
			r.a[k] = r.a[k] + y.a[k];
		return r;
	}
	friend StarMat operator-(const StarMat &x, const StarMat &y)
	{
		StarMat r = x;
		for (size_t k = 0; k < r.a.size(); ++k)
			r.a[k] = r.a[k] - y.a[k];
		return r;
	}
	friend bool operator==(const StarMat &x, const StarMat &y)
	{
		if (x.n != y.n)
			return false;
		for (size_t k = 0; k < x.a.size(); ++k)
			if (!(x.a[k] == y.a[k]))
				return false;
		return true;
	}

	// entrywise star-product matrix multiplication
	friend StarMat star_mul(const StarMat &x, const StarMat &y)
	{
		StarMat r = x;
		for (auto &e : r.a)
			e = StarElem(e.dim, e.order, e.chart);
		for (int i = 0; i < x.n; ++i)
			for (int k = 0; k < x.n; ++k)
			{
				if (x(i, k).is_zero())
					continue;
				for (int j = 0; j < x.n; ++j)
					r(i, j) = r(i, j) + star(x.spec, x(i, k), y(k, j));
			}
		return r;
	}

	// pointwise (lambda^0-compatible commutative) matrix product
	friend StarMat pointwise_mul(const StarMat &x, const StarMat &y)
	{
		StarMat r = x;
		for (auto &e : r.a)
			e = StarElem(e.dim, e.order, e.chart);
		for (int i = 0; i < x.n; ++i)
			for (int k = 0; k < x.n; ++k)
				for (int j = 0; j < x.n; ++j)
					r(i, j) = r(i, j) + x(i, k) * y(k, j);
		return r;
	}

	StarMat scaled(const CScalar &c) const
	{
		StarMat r = *this;
		for (auto &e : r.a)
			e = e.scaled(c);
		return r;
	}

	// (z_ij)* = conj(z_ji)
	StarMat star_involution() const
	{
		StarMat r = *this;
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				r(i, j) = conj((*this)(j, i));
		return r;
	}

	bool is_zero() const
	{
		for (auto &e : a)
			if (!e.is_zero())
				return false;
		return true;
	}
};

// P = 1/2 + (P0 - 1/2) * (1 + 4(P0 * P0 - P0))^{-1/2}
// for a pointwise idempotent P0; the inverse square root is the binomial
// series in x = 4(P0 * P0 - P0), which has lambda-order >= 1
inline StarMat deformed_projector(const StarMat &P0)
{
	if (!(pointwise_mul(P0, P0) == P0))
		throw NotIdempotent();
	size_t order = P0.a.empty() ? 0 : P0.a[0].order;
	int dim = P0.a.empty() ? 1 : P0.a[0].dim;
	StarMat I = StarMat::identity(P0.n, P0.spec, dim, order);
	StarMat x = (star_mul(P0, P0) - P0).scaled(CScalar(4));
	// binomial series for (1+x)^{-1/2}
	StarMat acc = I;
	StarMat xpow = I;
	Rat coeff = 1;
	for (size_t k = 1; k <= order; ++k)
	{
		xpow = star_mul(xpow, x);
		if (xpow.is_zero())
			break;
		// (-1/2 choose k) accumulated: multiply by (-1/2 - (k-1)) / k
		coeff *= (rat(-1, 2) - Rat(long(k) - 1)) / Rat(long(k));
		acc = acc + xpow.scaled(CScalar(coeff));
	}
	StarMat half = I.scaled(CScalar(rat(1, 2)));
	return half + star_mul(P0 - half, acc);
}

} // namespace defq
