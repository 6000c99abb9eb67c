#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/random.hpp"
#include "defq/star.hpp"

using namespace defq;

namespace {
const size_t ORD = 6;
StarElem Q() { return StarElem::coordinate(1, ORD, 0); }
StarElem P() { return StarElem::coordinate(1, ORD, 1); }
StarElem Z() { return StarElem::coordinate(1, ORD, 0, Chart::complex); }
StarElem Zb() { return StarElem::coordinate(1, ORD, 1, Chart::complex); }
CSeries iLam()
{
	return CSeries::lambda_power(ORD, 1, CScalar::I());
}
} // namespace

TEST_CASE("weyl oracle values")
{
	StarElem q = Q(), p = P();
	StarSpec w = StarSpec::weyl();
	CHECK(star(w, q, p) == q * p + StarElem::one(1, ORD).scaled(
	                                   iLam() * CSeries(ORD, CScalar(rat(1, 2)))));
	// q^2 * p^2 = q^2 p^2 + 2 i lam q p - lam^2 / 2
	StarElem lhs = star(w, q * q, p * p);
	StarElem rhs = q * q * p * p +
	               (q * p).scaled(iLam() * CSeries(ORD, CScalar(2))) +
	               StarElem::one(1, ORD).scaled(
	                   CSeries::lambda_power(ORD, 2, CScalar(rat(-1, 2))));
	CHECK(lhs == rhs);
	CHECK(star_commutator(w, q, p) ==
	      StarElem::one(1, ORD).scaled(iLam()));
}

TEST_CASE("standard-ordered oracle values")
{
	StarElem q = Q(), p = P();
	StarSpec s = StarSpec::standard();
	CHECK(star(s, q, p) == q * p);
	CHECK(star(s, p, q) == p * q - StarElem::one(1, ORD).scaled(iLam()));
	// p^2 * q^2 = q^2 p^2 - 4 i lam q p - 2 lam^2
	StarElem rhs = q * q * p * p -
	               (q * p).scaled(iLam() * CSeries(ORD, CScalar(4))) -
	               StarElem::one(1, ORD).scaled(
	                   CSeries::lambda_power(ORD, 2, CScalar(2)));
	CHECK(star(s, p * p, q * q) == rhs);
}

TEST_CASE("kappa endpoints match the closed-sum kernels")
{
	StarElem q = Q(), p = P();
	// kappa(1) is anti-standard: q * p picks up the full i lam
	CHECK(star(StarSpec::kappa(1), q, p) ==
	      q * p + StarElem::one(1, ORD).scaled(iLam()));
	std::mt19937_64 rng(11);
	for (int t = 0; t < 5; ++t)
	{
		StarElem f = random_poly(rng, 1, ORD, 3, Chart::real, 5);
		StarElem g = random_poly(rng, 1, ORD, 3, Chart::real, 5);
		CHECK(star(StarSpec::kappa(0), f, g) == star(StarSpec::standard(), f, g));
		CHECK(star(StarSpec::kappa(rat(1, 2)), f, g) ==
		      star(StarSpec::weyl(), f, g));
	}
}

TEST_CASE("wick oracle values")
{
	StarElem z = Z(), zb = Zb();
	StarSpec w = StarSpec::wick();
	CHECK(star(w, z, zb) ==
	      z * zb + StarElem::one(1, ORD, Chart::complex)
	                   .scaled(CSeries::lambda_power(ORD, 1, CScalar(2))));
	CHECK(star(w, zb, z) == zb * z);
	// tkappa(1) is Wick
	std::mt19937_64 rng(13);
	for (int t = 0; t < 5; ++t)
	{
		StarElem f = random_poly(rng, 1, ORD, 3, Chart::complex, 5);
		StarElem g = random_poly(rng, 1, ORD, 3, Chart::complex, 5);
		CHECK(star(StarSpec::tkappa(1), f, g) == star(w, f, g));
	}
}

TEST_CASE("chart guards")
{
	CHECK_THROWS_AS(star(StarSpec::wick(), Q(), P()), ChartMismatch);
	CHECK_THROWS_AS(star(StarSpec::weyl(), Z(), Zb()), ChartMismatch);
	CHECK_THROWS_AS(star(StarSpec::tkappa(0), Q(), P()), ChartMismatch);
}

TEST_CASE("neumaier operator")
{
	StarElem q = Q(), p = P();
	Rat k(1, 3);
	// N_k(qp) = qp - i k lam
	CHECK(neumaier(k, q * p) ==
	      q * p - StarElem::one(1, ORD).scaled(
	                  CSeries::lambda_power(ORD, 1, CScalar::I() * CScalar(k))));
	CHECK(neumaier(k, q) == q);
	std::mt19937_64 rng(17);
	for (int t = 0; t < 5; ++t)
	{
		StarElem f = random_poly(rng, 1, ORD, 4, Chart::real, 5);
		CHECK(neumaier(-k, neumaier(k, f)) == f);
		StarElem g = random_poly(rng, 1, ORD, 3, Chart::real, 5);
		CHECK(star_via_equivalence(k, f, g) == star(StarSpec::kappa(k), f, g));
	}
}

TEST_CASE("spec equality is structural")
{
	CHECK(StarSpec::kappa(rat(1, 2)) != StarSpec::weyl());
	CHECK(StarSpec::kappa(0) != StarSpec::standard());
	CHECK(StarSpec::kappa(rat(1, 3)) == StarSpec::kappa(rat(1, 3)));
	CHECK(StarSpec::weyl().name() == "weyl");
	CHECK(StarSpec::kappa(rat(1, 3)).name() == "kappa:1/3");
}

TEST_CASE("parallel kernel agrees with serial")
{
	std::mt19937_64 rng(19);
	for (auto spec : {StarSpec::weyl(), StarSpec::standard()})
		for (int t = 0; t < 3; ++t)
		{
			StarElem f = random_poly(rng, 2, ORD, 4, Chart::real, 12);
			StarElem g = random_poly(rng, 2, ORD, 4, Chart::real, 12);
			CHECK(star_parallel(spec, f, g) == star(spec, f, g));
		}
}

TEST_CASE("invariance checker flags a non-symplectic map")
{
	Mat D(2, 2);
	D(0, 0) = CScalar(2);
	D(1, 1) = CScalar(1);
	std::vector<std::pair<StarElem, StarElem>> samples{{Q(), P()}};
	InvarianceReport rep =
	    invariance_check(LinearMap(D), StarSpec::weyl(), samples);
	CHECK(!rep.invariant);
	CHECK(!rep.counterexample.empty());
	InvarianceReport ok = invariance_check(
	    LinearMap(LinearMap::canonical_J(1)), StarSpec::weyl(), samples);
	CHECK(ok.invariant);
}
