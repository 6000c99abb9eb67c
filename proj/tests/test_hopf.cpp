#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/gutt.hpp"
#include "defq/hopf.hpp"
#include "defq/hopf_fixtures.hpp"

using namespace defq;

TEST_CASE("group algebra of Z4")
{
	HopfAlgebra H = group_algebra(cyclic_group_table(4));
	HopfReport rep = verify_hopf(H);
	CHECK(rep.ok());
	CHECK(rep.skipped == 0);
	CHECK(is_cocommutative(H));
	CHECK(antipode_involutive(H));
	// S(g) = g^{-1}
	CHECK(*H.apply_antipode(H.basis_elem(1)) == H.basis_elem(3));
	CHECK(H.apply_counit(H.basis_elem(2)) == CScalar(1));
}

TEST_CASE("group algebra of S3")
{
	HopfAlgebra H = group_algebra(s3_group_table());
	CHECK(verify_hopf(H).ok());
	// C[G] is always cocommutative even for nonabelian G
	CHECK(is_cocommutative(H));
	// but the algebra is noncommutative: check one transposition pair
	auto ab = H.product(H.basis_elem(1), H.basis_elem(3));
	auto ba = H.product(H.basis_elem(3), H.basis_elem(1));
	CHECK(!(*ab == *ba));
}

TEST_CASE("malformed tables are rejected")
{
	// identity not at index 0
	std::vector<std::vector<int>> t = {{1, 0}, {0, 1}};
	CHECK_THROWS_AS(group_algebra(t), NotAGroup);
	// missing inverse
	std::vector<std::vector<int>> u = {{0, 1}, {1, 1}};
	CHECK_THROWS_AS(group_algebra(u), NotAGroup);
}

TEST_CASE("function algebra duality")
{
	auto tab = cyclic_group_table(4);
	HopfAlgebra F = function_algebra(tab);
	HopfAlgebra C = group_algebra(tab);
	CHECK(verify_hopf(F).ok());
	CHECK(is_cocommutative(F)); // Z4 is abelian
	CHECK(!is_cocommutative(function_algebra(s3_group_table())));
	// pairing: <delta_a * delta_b, g> = <delta_a x delta_b, Delta g>
	for (int a = 0; a < 4; ++a)
		for (int b = 0; b < 4; ++b)
			for (int g = 0; g < 4; ++g)
			{
				CScalar lhs = group_function_pairing(
				    *F.product(F.basis_elem(a), F.basis_elem(b)),
				    C.basis_elem(g));
				CScalar rhs = (a == g && b == g) ? CScalar(1) : CScalar();
				CHECK(lhs == rhs);
			}
}

TEST_CASE("truncated enveloping algebra of heisenberg")
{
	HopfAlgebra H = truncated_enveloping(LieAlgebra::heisenberg(), 3);
	HopfReport rep = verify_hopf(H);
	CHECK(rep.ok());
	CHECK(rep.skipped > 0); // degree cap leaves products undefined
	CHECK(rep.checked > 0);
	CHECK(is_cocommutative(H));
	// e1 e2 - e2 e1 = e3 in U(heis)
	int e1 = -1, e2 = -1, e3 = -1;
	for (int i = 0; i < H.dim; ++i)
	{
		if (H.labels[i] == "e1")
			e1 = i;
		if (H.labels[i] == "e2")
			e2 = i;
		if (H.labels[i] == "e3")
			e3 = i;
	}
	REQUIRE(e1 >= 0);
	REQUIRE(e2 >= 0);
	REQUIRE(e3 >= 0);
	auto ab = H.product(H.basis_elem(e1), H.basis_elem(e2));
	auto ba = H.product(H.basis_elem(e2), H.basis_elem(e1));
	REQUIRE(ab);
	REQUIRE(ba);
	HopfElem comm(H.dim);
	for (int k = 0; k < H.dim; ++k)
		comm[k] = (*ab)[k] - (*ba)[k];
	CHECK(comm == H.basis_elem(e3));
	// generators are primitive
	auto d = H.comult[e1];
	REQUIRE(d);
	CHECK(d->size() == 2);
}

TEST_CASE("q-deformed fixture breaks cocommutativity")
{
	HopfAlgebra H = q_deformed_fixture(rat(2));
	HopfReport rep = verify_hopf(H);
	CHECK(rep.ok());
	CHECK(rep.skipped > 0);
	CHECK(!is_cocommutative(H));
	CHECK(!antipode_involutive(H));
	int X = -1;
	for (int i = 0; i < H.dim; ++i)
		if (H.labels[i] == "X^1")
			X = i;
	REQUIRE(X >= 0);
	// S^2(X) = q X = 2X
	auto s1 = H.apply_antipode(H.basis_elem(X));
	REQUIRE(s1);
	auto s2 = H.apply_antipode(*s1);
	REQUIRE(s2);
	HopfElem twoX(H.dim);
	twoX[X] = CScalar(2);
	CHECK(*s2 == twoX);
}

TEST_CASE("antipode inverse table")
{
	HopfAlgebra H = group_algebra(cyclic_group_table(5));
	auto inv = H.antipode_inverse();
	for (int i = 0; i < H.dim; ++i)
	{
		auto s = H.apply_antipode(inv[i]);
		REQUIRE(s);
		CHECK(*s == H.basis_elem(i));
	}
	HopfAlgebra P = q_deformed_fixture(rat(2));
	CHECK_THROWS_AS(P.antipode_inverse(), std::runtime_error);
}
