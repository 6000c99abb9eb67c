#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/actions.hpp"

using namespace defq;

namespace {

// translation action of C[Z4] on F(Z4): g^j > delta_k = delta_{j+k}
struct Z4Setup
{
	HopfAlgebra H, FH;
	TableAlgebra A;
	HAction<TableAlgebra> act;

	Z4Setup()
	{
		auto tab = cyclic_group_table(4);
		H = group_algebra(tab);
		FH = function_algebra(tab);
		A = TableAlgebra::from_hopf(FH);
		act.H = &H;
		act.A = &A;
		TableAlgebra *Ap = &A;
		act.act_basis = [Ap](int j, const TableAlgebra::Elem &a) {
			TableAlgebra::Elem r = Ap->zero();
			for (int k = 0; k < 4; ++k)
				r[size_t((j + k) % 4)] = a[size_t(k)];
			return r;
		};
	}

	std::vector<TableAlgebra::Elem> basis() const
	{
		std::vector<TableAlgebra::Elem> probes;
		for (int i = 0; i < A.dim; ++i)
			probes.push_back(A.basis_elem(i));
		return probes;
	}

	CScalar chi(int m, int j) const
	{
		CScalar r(1);
		for (int k = 0; k < (j * m) % 4; ++k)
			r *= CScalar::I();
		return r;
	}
};

} // namespace

TEST_CASE("matrix algebra context")
{
	TableAlgebra M = TableAlgebra::matrix_algebra(2);
	auto E11 = M.basis_elem(0), E12 = M.basis_elem(1), E21 = M.basis_elem(2);
	CHECK(M.eq(M.mul(E11, E12), E12));
	CHECK(M.is_zero(M.mul(E12, E12)));
	CHECK(M.eq(M.mul(E12, E21), E11));
	CHECK(M.eq(M.star_of(E12), E21));
	CHECK(M.eq(M.mul(M.unit(), E12), E12));
	CHECK(M.is_central(M.unit()));
	CHECK(!M.is_central(E12));
	// invert a diagonal element
	TableAlgebra::Elem d = M.zero();
	d[0] = CScalar(2);
	d[3] = CScalar::I();
	CHECK(M.eq(M.mul(d, M.invert(d)), M.unit()));
	CHECK_THROWS_AS(M.invert(E12), SingularMatrix);
}

TEST_CASE("trivial and translation actions verify")
{
	Z4Setup s;
	auto probes = s.basis();
	ActionReport triv = verify_action(trivial_action(s.H, s.A), probes);
	CHECK(triv.ok());
	ActionReport trans = verify_action(s.act, probes);
	CHECK(trans.ok());
	CHECK(trans.checked > 0);
	// a broken shift (j^2 is not a homomorphism on Z4) must be flagged
	HAction<TableAlgebra> bad = s.act;
	TableAlgebra *Ap = &s.A;
	bad.act_basis = [Ap](int j, const TableAlgebra::Elem &a) {
		TableAlgebra::Elem r = Ap->zero();
		for (int k = 0; k < 4; ++k)
			r[size_t((j * j + k) % 4)] = a[size_t(k)];
		return r;
	};
	CHECK(!verify_action(bad, probes).ok());
}

TEST_CASE("adjoint action of a group algebra")
{
	HopfAlgebra H = group_algebra(s3_group_table());
	TableAlgebra HA = TableAlgebra::from_hopf(H);
	std::vector<TableAlgebra::Elem> probes;
	for (int i = 0; i < HA.dim; ++i)
		probes.push_back(HA.basis_elem(i));
	CHECK(verify_action(adjoint_action(H, HA), probes).ok());
}

TEST_CASE("crossed product of F(Z2) by C[Z2]")
{
	auto tab = cyclic_group_table(2);
	HopfAlgebra H = group_algebra(tab);
	TableAlgebra A = TableAlgebra::from_hopf(function_algebra(tab));
	HAction<TableAlgebra> act;
	act.H = &H;
	act.A = &A;
	TableAlgebra *Ap = &A;
	act.act_basis = [Ap](int j, const TableAlgebra::Elem &a) {
		TableAlgebra::Elem r = Ap->zero();
		for (int k = 0; k < 2; ++k)
			r[size_t((j + k) % 2)] = a[size_t(k)];
		return r;
	};
	std::vector<CrossedElem<TableAlgebra>> basis;
	for (int i = 0; i < A.dim; ++i)
		for (int j = 0; j < H.dim; ++j)
			basis.push_back(crossed_elem(act, A.basis_elem(i), H.basis_elem(j)));
	for (auto &x : basis)
		for (auto &y : basis)
		{
			// (xy)* = y* x*
			CHECK(crossed_eq(act,
			                 crossed_star(act, crossed_mul(act, x, y)),
			                 crossed_mul(act, crossed_star(act, y),
			                             crossed_star(act, x))));
			for (auto &z : basis)
				CHECK(crossed_eq(act,
				                 crossed_mul(act, crossed_mul(act, x, y), z),
				                 crossed_mul(act, x, crossed_mul(act, y, z))));
		}
	for (auto &x : basis)
	{
		CHECK(crossed_eq(act, crossed_star(act, crossed_star(act, x)), x));
		CHECK(crossed_eq(act, crossed_mul(act, crossed_unit(act), x), x));
		CHECK(crossed_eq(act, crossed_mul(act, x, crossed_unit(act)), x));
		// <x,y>* = <y,x>
		for (auto &y : basis)
			CHECK(crossed_eq(act, crossed_star(act, crossed_inner(act, x, y)),
			                 crossed_inner(act, y, x)));
	}
	// noncommutativity witness: (delta_0 (x) g)(delta_0 (x) e) vs reverse
	auto u = crossed_elem(act, A.basis_elem(0), H.basis_elem(1));
	auto v = crossed_elem(act, A.basis_elem(0), H.basis_elem(0));
	CHECK(!crossed_eq(act, crossed_mul(act, u, v), crossed_mul(act, v, u)));
}

TEST_CASE("convolution unit and inverses")
{
	Z4Setup s;
	ConvMap<TableAlgebra> e = conv_unit(s.act);
	// character lifts u_m(h) = chi_m(h) 1_A
	for (int m = 0; m < 4; ++m)
	{
		ConvMap<TableAlgebra> u(4, s.A.zero());
		for (int j = 0; j < 4; ++j)
			u[size_t(j)] = s.A.scale(s.A.unit(), s.chi(m, j));
		CHECK(conv_eq(s.act, convolution(s.act, u, e), u));
		CHECK(conv_eq(s.act, convolution(s.act, e, u), u));
		GLReport rep = gl_membership(s.act, u, s.basis());
		CHECK(rep.in_GL());
		CHECK(rep.in_U());
		ConvMap<TableAlgebra> inv = conv_inverse(s.act, u);
		CHECK(conv_eq(s.act, convolution(s.act, u, inv), e));
		CHECK(conv_eq(s.act, convolution(s.act, inv, u), e));
	}
}

TEST_CASE("hat map membership")
{
	Z4Setup s;
	// c = 2 delta_0 + delta_1 + delta_2 + delta_3: invertible, |c| not constant
	TableAlgebra::Elem c = s.A.zero();
	c[0] = CScalar(2);
	c[1] = c[2] = c[3] = CScalar(1);
	ConvMap<TableAlgebra> hc = hat_map(s.act, c);
	GLReport rep = gl_membership(s.act, hc, s.basis());
	CHECK(rep.in_GL());
	CHECK(!rep.in_U());
	// c = i delta_0 + ...: unimodular values give a unitary hat
	c[0] = CScalar::I();
	ConvMap<TableAlgebra> hu = hat_map(s.act, c);
	GLReport urep = gl_membership(s.act, hu, s.basis());
	CHECK(urep.in_U());
	// invariant c (constant function) hats to the convolution unit
	TableAlgebra::Elem k = s.A.zero();
	k[0] = k[1] = k[2] = k[3] = CScalar(5);
	CHECK(conv_eq(s.act, hat_map(s.act, k), conv_unit(s.act)));
	CHECK_THROWS_AS(hat_map(s.act, s.A.zero()), SingularMatrix);
}

TEST_CASE("character automorphisms")
{
	Z4Setup s;
	// chi = eps gives the identity
	std::vector<CScalar> eps(4);
	for (int j = 0; j < 4; ++j)
		eps[size_t(j)] = CScalar(1);
	auto id = char_automorphism(s.H, eps);
	for (int j = 0; j < 4; ++j)
		CHECK(id[size_t(j)] == s.H.basis_elem(j));
	// composition law Phi^chi o Phi^chi' = Phi^{chi chi'}
	std::vector<CScalar> c1(4), c2(4), c12(4);
	for (int j = 0; j < 4; ++j)
	{
		c1[size_t(j)] = s.chi(1, j);
		c2[size_t(j)] = s.chi(2, j);
		c12[size_t(j)] = s.chi(3, j);
	}
	auto p1 = char_automorphism(s.H, c1);
	auto p2 = char_automorphism(s.H, c2);
	auto p12 = char_automorphism(s.H, c12);
	for (int j = 0; j < 4; ++j)
	{
		HopfElem v = s.H.zero();
		for (int k = 0; k < 4; ++k)
			for (int l = 0; l < 4; ++l)
				v[size_t(l)] += p2[size_t(j)][size_t(k)] * p1[size_t(k)][size_t(l)];
		CHECK(v == p12[size_t(j)]);
	}
	CHECK(!(p1[1] == s.H.basis_elem(1))); // nontrivial character moves g
}
