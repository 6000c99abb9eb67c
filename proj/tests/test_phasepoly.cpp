#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/phasepoly.hpp"
#include "defq/random.hpp"

using namespace defq;

namespace {
const int N = 1;
const size_t ORD = 4;
StarElem Q() { return StarElem::coordinate(N, ORD, 0); }
StarElem P() { return StarElem::coordinate(N, ORD, 1); }
StarElem Z() { return StarElem::coordinate(N, ORD, 0, Chart::complex); }
StarElem Zb() { return StarElem::coordinate(N, ORD, 1, Chart::complex); }
} // namespace

TEST_CASE("ring operations")
{
	StarElem q = Q(), p = P();
	CHECK(q * p == p * q);
	CHECK(q + p - p == q);
	CHECK((q + p) * (q - p) == q * q - p * p);
	CHECK((q - q).is_zero());
	CHECK(StarElem::one(N, ORD) * q == q);
	CHECK_THROWS_AS(q + StarElem::coordinate(2, ORD, 0), DimMismatch);
	CHECK_THROWS_AS(q + StarElem::coordinate(N, 6, 0), OrderMismatch);
	CHECK_THROWS_AS(q + Z(), ChartMismatch);
}

TEST_CASE("partial derivatives")
{
	StarElem q = Q(), p = P();
	StarElem f = q * q * p; // q^2 p
	CHECK(partial(f, 0) == (q * p).scaled(CScalar(2)));
	CHECK(partial(f, 1) == q * q);
	CHECK(partial(partial(f, 1), 1).is_zero());
	// mixed partials commute
	StarElem g = q * q * q * p * p;
	CHECK(partial(partial(g, 0), 1) == partial(partial(g, 1), 0));
}

TEST_CASE("poisson bracket")
{
	StarElem q = Q(), p = P();
	CHECK(poisson(q, p) == StarElem::one(N, ORD));
	CHECK(poisson(p, q) == -StarElem::one(N, ORD));
	CHECK(poisson(q, q).is_zero());
	// Leibniz: {f, gh} = {f,g}h + g{f,h}
	StarElem f = q * q + p, g = q * p, h = p * p;
	CHECK(poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h));
	CHECK_THROWS_AS(poisson(Z(), Zb()), ChartMismatch);
}

TEST_CASE("conjugation")
{
	StarElem q = Q(), p = P();
	StarElem f = q.scaled(CScalar::I()) + p;
	CHECK(conj(f) == p - q.scaled(CScalar::I()));
	CHECK(conj(conj(f)) == f);
	// in the complex chart conjugation swaps z and zbar
	CHECK(conj(Z()) == Zb());
	CHECK(conj(Z() * Z()) == Zb() * Zb());
}

TEST_CASE("chart changes are mutually inverse")
{
	StarElem q = Q(), p = P();
	CHECK(to_real(to_complex(q)) == q);
	CHECK(to_real(to_complex(p * p * q)) == p * p * q);
	CHECK(to_complex(to_real(Z() * Zb())) == Z() * Zb());
	// z = q + i p
	CHECK(to_real(Z()) == q + p.scaled(CScalar::I()));
	std::mt19937_64 rng(7);
	for (int t = 0; t < 5; ++t)
	{
		StarElem f = random_poly(rng, 2, ORD, 3, Chart::real, 6);
		CHECK(to_real(to_complex(f)) == f);
	}
}

TEST_CASE("classical part and lambda order")
{
	StarElem q = Q();
	StarElem f = q + q.scaled(CSeries::lambda_power(ORD, 2));
	PhasePoly c = f.classical();
	CHECK(c == q.classical());
	CHECK(f.lambda_order() == size_t(0));
	CHECK((f - q).lambda_order() == size_t(2));
	CHECK(!StarElem(N, ORD).lambda_order().has_value());
}

TEST_CASE("linear maps")
{
	Mat J = LinearMap::canonical_J(1);
	LinearMap gJ(J);
	CHECK(gJ.is_symplectic());
	// J sends (q,p) to (p,-q), so the pullback action gives J.q = -p
	CHECK(apply_linear(gJ, Q()) == -P());
	CHECK(apply_linear(gJ, P()) == Q());
	Mat D(2, 2);
	D(0, 0) = CScalar(2);
	D(1, 1) = CScalar(1);
	CHECK(!LinearMap(D).is_symplectic());
	Mat S(2, 2);
	S(0, 0) = CScalar(2);
	S(1, 1) = CScalar(rat(1, 2));
	CHECK(LinearMap(S).is_symplectic());
	// action is a homomorphism on products
	StarElem f = Q() * P() + Q();
	CHECK(apply_linear(gJ, f * f) ==
	      apply_linear(gJ, f) * apply_linear(gJ, f));
}
