#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/morita.hpp"
#include "defq/random.hpp"

using namespace defq;

namespace {
using Vec = std::vector<CScalar>;
} // namespace

TEST_CASE("cauchy-schwarz gap is exact and nonnegative")
{
	InnerProdSpace sp = InnerProdSpace::standard(3);
	Vec phi = {CScalar(1), CScalar::I(), CScalar()};
	Vec psi = {CScalar(rat(1, 2)), CScalar(1), CScalar(-1)};
	Rat gap = cauchy_schwarz_gap(sp, phi, psi);
	CHECK(gap >= 0);
	// equality iff proportional
	Vec twophi = {CScalar(2), CScalar(2) * CScalar::I(), CScalar()};
	CHECK(cauchy_schwarz_gap(sp, phi, twophi) == 0);
	std::mt19937_64 rng(3);
	for (int t = 0; t < 50; ++t)
	{
		Vec a(3), b(3);
		for (int i = 0; i < 3; ++i)
		{
			a[size_t(i)] = random_cscalar(rng);
			b[size_t(i)] = random_cscalar(rng);
		}
		CHECK(cauchy_schwarz_gap(sp, a, b) >= 0);
	}
	// an indefinite gram is rejected
	Mat g(2, 2);
	g(0, 0) = CScalar(1);
	g(1, 1) = CScalar(-1);
	InnerProdSpace bad(g);
	CHECK_THROWS_AS(cauchy_schwarz_gap(bad, {CScalar(1), CScalar()},
	                                   {CScalar(), CScalar(1)}),
	                IndefiniteGram);
}

TEST_CASE("adjoints against weighted grams")
{
	Mat g1(2, 2), g2(2, 2);
	g1(0, 0) = CScalar(2);
	g1(1, 1) = CScalar(1);
	g2(0, 0) = CScalar(1);
	g2(0, 1) = CScalar::I();
	g2(1, 0) = -CScalar::I();
	g2(1, 1) = CScalar(3);
	InnerProdSpace s1(g1), s2(g2);
	std::mt19937_64 rng(5);
	for (int t = 0; t < 10; ++t)
	{
		Mat A(2, 2);
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j)
				A(i, j) = random_cscalar(rng);
		Mat As = adjoint(A, s1, s2);
		// <A phi, psi>_2 = <phi, A* psi>_1 on a basis sweep
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j)
			{
				Vec phi(2), psi(2);
				phi[size_t(i)] = CScalar(1);
				psi[size_t(j)] = CScalar(1);
				Vec Aphi(2), Aspsi(2);
				for (int r = 0; r < 2; ++r)
					for (int c = 0; c < 2; ++c)
					{
						Aphi[size_t(r)] += A(r, c) * phi[size_t(c)];
						Aspsi[size_t(r)] += As(r, c) * psi[size_t(c)];
					}
				CHECK(s2.inner(Aphi, psi) == s1.inner(phi, Aspsi));
			}
	}
}

TEST_CASE("rank-one operators compose and adjoint correctly")
{
	InnerProdSpace sp = InnerProdSpace::standard(3);
	std::mt19937_64 rng(7);
	for (int t = 0; t < 20; ++t)
	{
		Vec phi(3), psi(3), phi2(3), psi2(3);
		for (int i = 0; i < 3; ++i)
		{
			phi[size_t(i)] = random_cscalar(rng);
			psi[size_t(i)] = random_cscalar(rng);
			phi2[size_t(i)] = random_cscalar(rng);
			psi2[size_t(i)] = random_cscalar(rng);
		}
		Mat t1 = rank_one(sp, phi, psi), t2 = rank_one(sp, phi2, psi2);
		// Theta_{phi,psi} Theta_{phi2,psi2} = Theta_{phi <psi,phi2>, psi2}
		Vec scaled(3);
		CScalar c = sp.inner(psi, phi2);
		for (int i = 0; i < 3; ++i)
			scaled[size_t(i)] = phi[size_t(i)] * c;
		CHECK(t1 * t2 == rank_one(sp, scaled, psi2));
		// Theta* = Theta_{psi,phi}
		CHECK(adjoint(t1, sp, sp) == rank_one(sp, psi, phi));
	}
}

TEST_CASE("induced inner product degenerates off the diagonal")
{
	// Gram over the n^2 basis pairs is delta_ab delta_cd: rank one
	auto ker = induced_degenerate_space(2);
	CHECK(ker.size() == 3);
	auto ker3 = induced_degenerate_space(3);
	CHECK(ker3.size() == 8);
	// the diagonal-sum vector is not degenerate
	Mat d(2, 2);
	d(0, 0) = CScalar(1);
	d(1, 1) = CScalar(1);
	CHECK(induced_inner(d, d) == CScalar(4));
	Mat off(2, 2);
	off(0, 1) = CScalar(1);
	CHECK(induced_inner(off, off).is_zero());
}

TEST_CASE("fullness of idempotents in M3")
{
	Mat P(3, 3);
	P(0, 0) = CScalar(1);
	CHECK(is_full_idempotent(P)); // any nonzero projection is full in M_n
	P(1, 1) = CScalar(1);
	CHECK(is_full_idempotent(P));
	CHECK(!is_full_idempotent(Mat(3, 3))); // zero is not full
	Mat notp(3, 3);
	notp(0, 1) = CScalar(1);
	notp(1, 0) = CScalar(1);
	CHECK_THROWS_AS(is_full_idempotent(notp), NotIdempotent);
}

TEST_CASE("deformed projector from a conjugated pointwise idempotent")
{
	const int dim = 1;
	const size_t ORD = 4;
	StarSpec w = StarSpec::weyl();
	StarElem q = StarElem::coordinate(dim, ORD, 0);
	StarElem p = StarElem::coordinate(dim, ORD, 1);
	StarElem one = StarElem::one(dim, ORD);
	// rank-one v w^T with w.v = 1: v = (p, 1), w = (q, 1 - pq)
	StarMat P0(2, w, dim, ORD);
	P0(0, 0) = p * q;
	P0(0, 1) = p * (one - p * q);
	P0(1, 0) = q;
	P0(1, 1) = one - p * q;
	REQUIRE(pointwise_mul(P0, P0) == P0);
	REQUIRE(!(star_mul(P0, P0) == P0)); // classically idempotent only
	StarMat P = deformed_projector(P0);
	CHECK(star_mul(P, P) == P);
	// the correction is pure lambda: classical parts agree
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			CHECK(P(i, j).classical() == P0(i, j).classical());
}

TEST_CASE("hermitian constant idempotents stay hermitian")
{
	const size_t ORD = 4;
	StarSpec w = StarSpec::weyl();
	StarMat H0(2, w, 1, ORD);
	CScalar half(rat(1, 2));
	H0(0, 0) = StarElem::constant(1, ORD, half);
	H0(0, 1) = StarElem::constant(1, ORD, half * CScalar::I());
	H0(1, 0) = StarElem::constant(1, ORD, -(half * CScalar::I()));
	H0(1, 1) = StarElem::constant(1, ORD, half);
	REQUIRE(H0.star_involution() == H0);
	REQUIRE(pointwise_mul(H0, H0) == H0);
	StarMat P = deformed_projector(H0);
	CHECK(star_mul(P, P) == P);
	CHECK(P.star_involution() == P);
	CHECK(P == H0); // constants are untouched by the deformation
	CHECK_THROWS_AS(deformed_projector(StarMat::identity(2, w, 1, ORD) + H0),
	                NotIdempotent);
}
