#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/fedosov.hpp"
#include "defq/random.hpp"

using namespace defq;

namespace {
const size_t ORD = 4;
const size_t IORD = 2 * ORD + 4;

FiberElem y_coord(int n, int v)
{
	FiberElem e(n, IORD);
	FiberKey k{Monomial(2 * n), Monomial(2 * n), 0};
	k.sym.e[size_t(v)] = 1;
	e.add_term(k, CSeries(IORD, CScalar(1)));
	return e;
}
} // namespace

TEST_CASE("merge sign bookkeeping")
{
	CHECK(fiber::merge_sign(0, 0) == 1);
	CHECK(fiber::merge_sign(1u << 0, 1u << 1) == 1);  // dx0 ^ dx1 in order
	CHECK(fiber::merge_sign(1u << 1, 1u << 0) == -1); // one transposition
	CHECK(fiber::merge_sign(1u << 1, 1u << 1) == 0);  // overlap kills the term
	CHECK(fiber::merge_sign(0b101, 0b010) == -1);     // dx0 dx2 ^ dx1
}

TEST_CASE("fiber product oracle")
{
	SymplecticData data = SymplecticData::canonical(1, IORD);
	FiberElem yq = y_coord(1, 0), yp = y_coord(1, 1);
	// y_q o y_p = y_q y_p + i lambda / 2
	FiberElem expect = fiber_wedge(yq, yp);
	FiberElem one(1, IORD);
	one.add_term({Monomial(2), Monomial(2), 0},
	             CSeries::lambda_power(IORD, 1, CScalar::I() * CScalar(rat(1, 2))));
	CHECK(fiber_mul(data, yq, yp) == expect + one);
	// commutator [y_q, y_p] = i lambda
	FiberElem comm = fiber_comm(data, yq, yp, 0, 0);
	FiberElem ilam(1, IORD);
	ilam.add_term({Monomial(2), Monomial(2), 0},
	              CSeries::lambda_power(IORD, 1, CScalar::I()));
	CHECK(comm == ilam);
}

TEST_CASE("poincare identities on random fiber elements")
{
	std::mt19937_64 rng(3);
	for (int t = 0; t < 20; ++t)
	{
		FiberElem a = random_fiber(rng, 1 + int(t % 2), IORD);
		CHECK(fiber_delta(fiber_delta(a)).is_zero());
		CHECK(fiber_delta_inv(fiber_delta_inv(a)).is_zero());
		// delta delta^{-1} + delta^{-1} delta + sigma = id
		FiberElem lhs = fiber_delta(fiber_delta_inv(a)) +
		                fiber_delta_inv(fiber_delta(a)) + fiber_sigma(a);
		CHECK(lhs == a);
	}
}

TEST_CASE("fedosov r is normalized and flat")
{
	SymplecticData data = SymplecticData::canonical(1, IORD);
	FiberElem r = fedosov_r(data);
	// with Omega = 0 on a flat base the recursion yields r = 0
	CHECK(r.is_zero());
	// with a central Omega = lambda J it is nonzero but still normalized
	Mat J = LinearMap::canonical_J(1);
	SymplecticData dataO =
	    SymplecticData::canonical(1, IORD, {{1, J}});
	FiberElem rO = fedosov_r(dataO);
	CHECK(!rO.is_zero());
	CHECK(fiber_delta_inv(rO).is_zero());
}

TEST_CASE("taylor series fixes the base coordinates")
{
	SymplecticData data = SymplecticData::canonical(1, IORD);
	FiberElem r = fedosov_r(data);
	StarElem q = StarElem::coordinate(1, ORD, 0);
	// tau(q) = q + y_q
	FiberElem tq = fedosov_taylor(data, r, q);
	FiberElem expect = FiberElem::from_star(q, IORD) + y_coord(1, 0);
	CHECK(tq == expect);
	// sigma o tau = id
	CHECK(fiber_to_star(fiber_sigma(tq), ORD) == q);
}

TEST_CASE("flat fedosov star matches weyl")
{
	std::mt19937_64 rng(7);
	StarSpec w = StarSpec::weyl();
	for (int t = 0; t < 6; ++t)
	{
		int n = 1 + (t % 2);
		StarElem f = random_poly(rng, n, ORD, 3, Chart::real, 4);
		StarElem g = random_poly(rng, n, ORD, 3, Chart::real, 4);
		CHECK(fedosov_star_flat(f, g) == star(w, f, g));
	}
	// oracle: q * p = qp + i lambda / 2
	StarElem q = StarElem::coordinate(1, ORD, 0);
	StarElem p = StarElem::coordinate(1, ORD, 1);
	CHECK(fedosov_star_flat(q, p) ==
	      q * p + StarElem::one(1, ORD).scaled(
	                  CSeries::lambda_power(ORD, 1,
	                                        CScalar::I() * CScalar(rat(1, 2)))));
}

TEST_CASE("derivation squares to zero")
{
	Mat J = LinearMap::canonical_J(1);
	SymplecticData data = SymplecticData::canonical(1, IORD, {{1, J}});
	FiberElem r = fedosov_r(data);
	std::mt19937_64 rng(11);
	for (int t = 0; t < 5; ++t)
	{
		FiberElem a = random_fiber(rng, 1, IORD, 2, 3);
		// restrict to zero-forms so the grading argument is unambiguous
		FiberElem a0(1, IORD);
		for (auto &[k, s] : a.terms)
			if (k.form == 0)
				a0.add_term(k, s);
		FiberElem d1 = fedosov_derivation(data, r, a0, 0);
		FiberElem d2 = fedosov_derivation(data, r, d1, 1);
		CHECK(d2.is_zero());
	}
}

TEST_CASE("central omega deforms the product only at higher order")
{
	Mat J = LinearMap::canonical_J(1);
	StarElem q = StarElem::coordinate(1, ORD, 0);
	StarElem p = StarElem::coordinate(1, ORD, 1);
	StarElem comm = fedosov_star_flat(q, p, {{1, J}}) -
	                fedosov_star_flat(p, q, {{1, J}});
	// the commutation relation is untouched below lambda^2
	StarElem defect =
	    comm - StarElem::one(1, ORD).scaled(
	               CSeries::lambda_power(ORD, 1, CScalar::I()));
	auto o = defect.lambda_order();
	CHECK((!o || *o >= 2));
}

TEST_CASE("bad symplectic data is rejected")
{
	Mat notanti(2, 2);
	notanti(0, 1) = CScalar(1);
	notanti(1, 0) = CScalar(1);
	CHECK_THROWS_AS(SymplecticData(1, IORD, notanti), BadSymplecticData);
	Mat J = LinearMap::canonical_J(1);
	CHECK_THROWS_AS(SymplecticData(1, IORD, J, {{0, J}}), BadSymplecticData);
	Mat wrong(2, 2);
	CHECK_THROWS_AS(SymplecticData(2, IORD, wrong), BadSymplecticData);
}
