#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/gutt.hpp"

#include <memory>

using namespace defq;

namespace {
const size_t ORD = 6;
PBWPoly gen(const LieAlgebra &g, int i) { return PBWPoly::generator(g, ORD, i); }
} // namespace

TEST_CASE("lie algebra validation")
{
	CHECK_NOTHROW(LieAlgebra::heisenberg());
	CHECK_NOTHROW(LieAlgebra::sl2());
	CHECK_NOTHROW(LieAlgebra::solvable3());
	// antisymmetry failure
	auto t = std::vector(2, std::vector(2, std::vector<Rat>(2, Rat(0))));
	t[0][1][0] = 1;
	CHECK_THROWS_AS(LieAlgebra(2, t), BadLieAlgebra);
}

TEST_CASE("pbw reduction oracle")
{
	LieAlgebra g = LieAlgebra::heisenberg();
	// e2 e1 normal-orders to e1 e2 - lambda e3
	PBWPoly r = pbw_reduce(g, {1, 0}, ORD);
	PBWPoly expect = gen(g, 0) * gen(g, 1) -
	                 gen(g, 2).scaled(CSeries::lambda_power(ORD, 1));
	CHECK(r == expect);
	// already-ordered words are untouched
	CHECK(pbw_reduce(g, {0, 1, 2}, ORD) == gen(g, 0) * gen(g, 1) * gen(g, 2));
	CHECK(pbw_reduce(g, {}, ORD).terms.size() == 1);
}

TEST_CASE("pbw confluence under random descent choices")
{
	LieAlgebra g = LieAlgebra::sl2();
	std::mt19937_64 rng(5);
	auto rngp = std::make_shared<std::mt19937_64>(99);
	auto random_pick = [rngp](const std::vector<int> &descents) {
		return descents[size_t((*rngp)() % descents.size())];
	};
	for (int t = 0; t < 30; ++t)
	{
		detail::Word w = random_word(rng, 3, 2 + int(rng() % 4));
		CHECK(pbw_reduce(g, w, ORD) == pbw_reduce(g, w, ORD, random_pick));
	}
}

TEST_CASE("symmetrization is invertible")
{
	LieAlgebra g = LieAlgebra::sl2();
	std::mt19937_64 rng(9);
	for (int t = 0; t < 10; ++t)
	{
		PBWPoly f(3, ORD);
		for (int k = 0; k < 4; ++k)
		{
			std::vector<uint32_t> m(3);
			for (auto &e : m)
				e = uint32_t(rng() % 3);
			f.add_term(m, CSeries(ORD, CScalar(rat(long(rng() % 7) - 3))));
		}
		CHECK(desymmetrize(g, symmetrize(g, f)) == f);
	}
}

TEST_CASE("gutt star oracle on heisenberg")
{
	LieAlgebra g = LieAlgebra::heisenberg();
	PBWPoly e1 = gen(g, 0), e2 = gen(g, 1), e3 = gen(g, 2);
	CSeries halfLam = CSeries::lambda_power(ORD, 1, CScalar(rat(1, 2)));
	CHECK(gutt_star(g, e1, e2) == e1 * e2 + e3.scaled(halfLam));
	CHECK(gutt_star(g, e2, e1) == e1 * e2 - e3.scaled(halfLam));
	// e3 is central
	CHECK(gutt_star(g, e3, e1) == gutt_star(g, e1, e3));
	CHECK(gutt_star(g, e3, e1) == e1 * e3);
}

TEST_CASE("gutt star on sl2 reproduces the bracket")
{
	LieAlgebra g = LieAlgebra::sl2();
	PBWPoly e = gen(g, 0), h = gen(g, 2);
	// [h, e] = 2e, commutator carries one power of lambda
	PBWPoly comm = gutt_star(g, h, e) - gutt_star(g, e, h);
	CHECK(comm == e.scaled(CSeries::lambda_power(ORD, 1, CScalar(2))));
}

TEST_CASE("abelian gutt star is commutative")
{
	LieAlgebra g = LieAlgebra::abelian(3);
	std::mt19937_64 rng(21);
	for (int t = 0; t < 5; ++t)
	{
		PBWPoly f(3, ORD), h(3, ORD);
		for (int k = 0; k < 3; ++k)
		{
			std::vector<uint32_t> m(3), m2(3);
			for (size_t v = 0; v < 3; ++v)
			{
				m[v] = uint32_t(rng() % 3);
				m2[v] = uint32_t(rng() % 3);
			}
			f.add_term(m, CSeries(ORD, CScalar(rat(long(rng() % 5) - 2))));
			h.add_term(m2, CSeries(ORD, CScalar(rat(long(rng() % 5) - 2))));
		}
		CHECK(gutt_star(g, f, h) == f * h);
		CHECK(gutt_star(g, f, h) == gutt_star(g, h, f));
	}
}

TEST_CASE("gutt associativity on short random elements")
{
	LieAlgebra g = LieAlgebra::heisenberg();
	std::mt19937_64 rng(31);
	for (int t = 0; t < 5; ++t)
	{
		PBWPoly a(3, ORD), b(3, ORD), c(3, ORD);
		for (PBWPoly *p : {&a, &b, &c})
			for (int k = 0; k < 2; ++k)
			{
				std::vector<uint32_t> m(3);
				for (auto &e : m)
					e = uint32_t(rng() % 2);
				p->add_term(m, CSeries(ORD, CScalar(rat(long(rng() % 5) - 2))));
			}
		CHECK(gutt_star(g, gutt_star(g, a, b), c) ==
		      gutt_star(g, a, gutt_star(g, b, c)));
	}
}

TEST_CASE("momentum identity defects")
{
	LieAlgebra g = LieAlgebra::heisenberg();
	// with c = 1 the generator identity holds exactly
	MomentumReport ok = momentum_identity_check(g, 0, 1, CScalar(1), ORD);
	CHECK(!ok.defect_order.has_value());
	CHECK(ok.defect.is_zero());
	CHECK(ok.bracket_order == size_t(0));
	// with c = i it fails at first order in lambda
	MomentumReport bad = momentum_identity_check(g, 0, 1, CScalar::I(), ORD);
	CHECK(bad.defect_order == size_t(1));
	// with c = 0 the defect is the commutator itself
	MomentumReport zero = momentum_identity_check(g, 0, 1, CScalar(), ORD);
	CHECK(zero.defect_order == size_t(1));
	// commuting generators: defect vanishes for any c
	LieAlgebra ab = LieAlgebra::abelian(2);
	MomentumReport triv = momentum_identity_check(ab, 0, 1, CScalar(7), ORD);
	CHECK(triv.defect.is_zero());
	CHECK(!triv.bracket_order.has_value());
}
