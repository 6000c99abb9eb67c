#pragma once

#include "defq/algebra.hpp"

#include <functional>
#include <memory>

namespace defq {

// Hopf action of H on a *-algebra context A, given on the H-basis and
// extended linearly.
template <class Alg> struct HAction
{
	using Elem = typename Alg::Elem;

	const HopfAlgebra *H = nullptr;
	const Alg *A = nullptr;
	std::function<Elem(int, const Elem &)> act_basis;

	Elem act(const HopfElem &h, const Elem &a) const
	{
		Elem r = A->zero();
		for (int i = 0; i < H->dim; ++i)
			if (!h[size_t(i)].is_zero())
				r = A->add(r, A->scale(act_basis(i, a), h[size_t(i)]));
		return r;
	}
};

template <class Alg>
HAction<Alg> trivial_action(const HopfAlgebra &H, const Alg &A)
{
	HAction<Alg> act;
	act.H = &H;
	act.A = &A;
	act.act_basis = [&H, &A](int i, const typename Alg::Elem &a) {
		return A.scale(a, H.counit[size_t(i)]);
	};
	return act;
}

// ad(g)(h) = g_(1) h S(g_(2)) on the underlying algebra of H itself
inline HAction<TableAlgebra> adjoint_action(const HopfAlgebra &H,
                                            const TableAlgebra &HA)
{
	HAction<TableAlgebra> act;
	act.H = &H;
	act.A = &HA;
	act.act_basis = [&H, &HA](int i, const TableAlgebra::Elem &a) {
		TableAlgebra::Elem r = HA.zero();
		if (!H.comult[size_t(i)])
			throw std::runtime_error("adjoint action needs a total coproduct");
		for (auto &t : *H.comult[size_t(i)])
		{
			auto s = H.apply_antipode(H.basis_elem(t.right));
			if (!s)
				throw std::runtime_error("adjoint action needs a total antipode");
			r = HA.add(r, HA.scale(HA.mul(HA.mul(HA.basis_elem(t.left), a), *s),
			                       t.coeff));
		}
		return r;
	};
	return act;
}

// h > a = J(h_(1)) a J(S(h_(2))) for a unital algebra map J: H -> A
template <class Alg>
HAction<Alg> inner_action(const HopfAlgebra &H, const Alg &A,
                          std::vector<typename Alg::Elem> J)
{
	HAction<Alg> act;
	act.H = &H;
	act.A = &A;
	auto Jp = std::make_shared<std::vector<typename Alg::Elem>>(std::move(J));
	act.act_basis = [&H, &A, Jp](int i, const typename Alg::Elem &a) {
		typename Alg::Elem r = A.zero();
		if (!H.comult[size_t(i)])
			throw std::runtime_error("inner action needs a total coproduct");
		for (auto &t : *H.comult[size_t(i)])
		{
			auto s = H.apply_antipode(H.basis_elem(t.right));
			if (!s)
				throw std::runtime_error("inner action needs a total antipode");
			typename Alg::Elem js = A.zero();
			for (int k = 0; k < H.dim; ++k)
				if (!(*s)[size_t(k)].is_zero())
					js = A.add(js, A.scale((*Jp)[size_t(k)], (*s)[size_t(k)]));
			r = A.add(r, A.scale(A.mul(A.mul((*Jp)[size_t(t.left)], a), js),
			                     t.coeff));
		}
		return r;
	};
	return act;
}

// group-like basis elements of C[G] acting by linear coordinate changes on
// the star-polynomial algebra
inline HAction<WeylAlgebra> linear_action(const HopfAlgebra &H,
                                          const WeylAlgebra &A,
                                          std::vector<Mat> mats)
{
	HAction<WeylAlgebra> act;
	act.H = &H;
	act.A = &A;
	auto ms = std::make_shared<std::vector<Mat>>(std::move(mats));
	act.act_basis = [&A, ms](int i, const StarElem &f) {
		LinearMap g((*ms)[size_t(i)]);
		if (f.chart == Chart::real)
			return apply_linear(g, f);
		return to_complex(apply_linear(g, to_real(f)));
	};
	return act;
}

struct ActionReport
{
	std::vector<std::string> violations;
	long checked = 0, skipped = 0;
	bool ok() const { return violations.empty(); }
};

// checks the module-algebra and *-action axioms on the given probe set
// (for a finite algebra, pass its basis to make this exhaustive)
template <class Alg>
ActionReport verify_action(const HAction<Alg> &act,
                           const std::vector<typename Alg::Elem> &probes)
{
	ActionReport rep;
	const HopfAlgebra &H = *act.H;
	const Alg &A = *act.A;
	auto note = [&](bool okay, bool defined, const std::string &what) {
		if (!defined)
		{
			rep.skipped++;
			return;
		}
		rep.checked++;
		if (!okay)
			rep.violations.push_back(what);
	};

	// 1_H > a = a
	for (size_t pi = 0; pi < probes.size(); ++pi)
		note(A.eq(act.act(H.unit, probes[pi]), probes[pi]), true,
		     "unit acts as identity, probe " + std::to_string(pi));

	// (gh) > a = g > (h > a)
	for (int i = 0; i < H.dim; ++i)
		for (int j = 0; j < H.dim; ++j)
		{
			if (!H.mult[size_t(i)][size_t(j)])
			{
				rep.skipped += long(probes.size());
				continue;
			}
			for (size_t pi = 0; pi < probes.size(); ++pi)
			{
				auto lhs = act.act(*H.mult[size_t(i)][size_t(j)], probes[pi]);
				auto rhs = act.act_basis(i, act.act_basis(j, probes[pi]));
				note(A.eq(lhs, rhs), true,
				     "multiplicativity at (" + H.labels[size_t(i)] + "," +
				         H.labels[size_t(j)] + "), probe " + std::to_string(pi));
			}
		}

	// h > (ab) = (h_(1) > a)(h_(2) > b)
	for (int i = 0; i < H.dim; ++i)
	{
		if (!H.comult[size_t(i)])
		{
			rep.skipped += long(probes.size() * probes.size());
			continue;
		}
		for (size_t pa = 0; pa < probes.size(); ++pa)
			for (size_t pb = 0; pb < probes.size(); ++pb)
			{
				auto lhs = act.act_basis(int(i), A.mul(probes[pa], probes[pb]));
				auto rhs = A.zero();
				for (auto &t : *H.comult[size_t(i)])
					rhs = A.add(rhs,
					            A.scale(A.mul(act.act_basis(t.left, probes[pa]),
					                          act.act_basis(t.right, probes[pb])),
					                    t.coeff));
				note(A.eq(lhs, rhs), true,
				     "Leibniz rule at " + H.labels[size_t(i)] + ", probes " +
				         std::to_string(pa) + "," + std::to_string(pb));
			}
	}

	// h > 1_A = eps(h) 1_A
	for (int i = 0; i < H.dim; ++i)
		note(A.eq(act.act_basis(i, A.unit()),
		          A.scale(A.unit(), H.counit[size_t(i)])),
		     true, "unitality at " + H.labels[size_t(i)]);

	// (h > a)* = S(h)* > a*
	for (int i = 0; i < H.dim; ++i)
	{
		auto s = H.apply_antipode(H.basis_elem(i));
		std::optional<HopfElem> ss;
		if (s)
			ss = H.apply_star(*s);
		if (!ss)
		{
			rep.skipped += long(probes.size());
			continue;
		}
		for (size_t pi = 0; pi < probes.size(); ++pi)
		{
			auto lhs = A.star_of(act.act_basis(i, probes[pi]));
			auto rhs = act.act(*ss, A.star_of(probes[pi]));
			note(A.eq(lhs, rhs), true,
			     "*-compatibility at " + H.labels[size_t(i)] + ", probe " +
			         std::to_string(pi));
		}
	}
	return rep;
}

// ---------------------------------------------------------------------------
// crossed product A x| H

template <class Alg> struct CrossedElem
{
	// A-coefficient per H basis slot (normal form)
	std::vector<typename Alg::Elem> slot;
};

template <class Alg>
CrossedElem<Alg> crossed_zero(const HAction<Alg> &act)
{
	CrossedElem<Alg> x;
	x.slot.assign(size_t(act.H->dim), act.A->zero());
	return x;
}

template <class Alg>
CrossedElem<Alg> crossed_unit(const HAction<Alg> &act)
{
	CrossedElem<Alg> x = crossed_zero(act);
	for (int i = 0; i < act.H->dim; ++i)
		if (!act.H->unit[size_t(i)].is_zero())
			x.slot[size_t(i)] = act.A->scale(act.A->unit(), act.H->unit[size_t(i)]);
	return x;
}

template <class Alg>
CrossedElem<Alg> crossed_elem(const HAction<Alg> &act,
                              const typename Alg::Elem &a, const HopfElem &h)
{
	CrossedElem<Alg> x = crossed_zero(act);
	for (int i = 0; i < act.H->dim; ++i)
		if (!h[size_t(i)].is_zero())
			x.slot[size_t(i)] = act.A->scale(a, h[size_t(i)]);
	return x;
}

template <class Alg>
CrossedElem<Alg> crossed_add(const HAction<Alg> &act, const CrossedElem<Alg> &x,
                             const CrossedElem<Alg> &y)
{
	CrossedElem<Alg> r = x;
	for (size_t i = 0; i < r.slot.size(); ++i)
		r.slot[i] = act.A->add(r.slot[i], y.slot[i]);
	return r;
}

template <class Alg>
CrossedElem<Alg> crossed_sub(const HAction<Alg> &act, const CrossedElem<Alg> &x,
                             const CrossedElem<Alg> &y)
{
	CrossedElem<Alg> r = x;
	for (size_t i = 0; i < r.slot.size(); ++i)
		r.slot[i] = act.A->sub(r.slot[i], y.slot[i]);
	return r;
}

template <class Alg>
bool crossed_eq(const HAction<Alg> &act, const CrossedElem<Alg> &x,
                const CrossedElem<Alg> &y)
{
	for (size_t i = 0; i < x.slot.size(); ++i)
		if (!act.A->eq(x.slot[i], y.slot[i]))
			return false;
	return true;
}

// (a (x) g)(b (x) h) = a (g_(1) > b) (x) g_(2) h
template <class Alg>
CrossedElem<Alg> crossed_mul(const HAction<Alg> &act, const CrossedElem<Alg> &x,
                             const CrossedElem<Alg> &y)
{
	const HopfAlgebra &H = *act.H;
	const Alg &A = *act.A;
	CrossedElem<Alg> r = crossed_zero(act);
	for (int g = 0; g < H.dim; ++g)
	{
		if (A.is_zero(x.slot[size_t(g)]))
			continue;
		if (!H.comult[size_t(g)])
			throw std::runtime_error("crossed product needs a total coproduct");
		for (int h = 0; h < H.dim; ++h)
		{
			if (A.is_zero(y.slot[size_t(h)]))
				continue;
			for (auto &t : *H.comult[size_t(g)])
			{
				if (!H.mult[size_t(t.right)][size_t(h)])
					throw std::runtime_error(
					    "crossed product needs total multiplication");
				typename Alg::Elem a = A.scale(
				    A.mul(x.slot[size_t(g)],
				          act.act_basis(t.left, y.slot[size_t(h)])),
				    t.coeff);
				const HopfElem &gh = *H.mult[size_t(t.right)][size_t(h)];
				for (int k = 0; k < H.dim; ++k)
					if (!gh[size_t(k)].is_zero())
						r.slot[size_t(k)] =
						    A.add(r.slot[size_t(k)], A.scale(a, gh[size_t(k)]));
			}
		}
	}
	return r;
}

// (a (x) h)* = h_(1)* > a* (x) h_(2)*
template <class Alg>
CrossedElem<Alg> crossed_star(const HAction<Alg> &act, const CrossedElem<Alg> &x)
{
	const HopfAlgebra &H = *act.H;
	const Alg &A = *act.A;
	CrossedElem<Alg> r = crossed_zero(act);
	for (int h = 0; h < H.dim; ++h)
	{
		if (A.is_zero(x.slot[size_t(h)]))
			continue;
		if (!H.comult[size_t(h)])
			throw std::runtime_error("crossed star needs a total coproduct");
		typename Alg::Elem astar = A.star_of(x.slot[size_t(h)]);
		for (auto &t : *H.comult[size_t(h)])
		{
			auto ls = H.apply_star(H.basis_elem(t.left));
			auto rs = H.apply_star(H.basis_elem(t.right));
			if (!ls || !rs)
				throw std::runtime_error("crossed star needs a total *-table");
			typename Alg::Elem acted = A.zero();
			for (int u = 0; u < H.dim; ++u)
				if (!(*ls)[size_t(u)].is_zero())
					acted = A.add(acted, A.scale(act.act_basis(u, astar),
					                             (*ls)[size_t(u)]));
			acted = A.scale(acted, t.coeff.conj());
			for (int k = 0; k < H.dim; ++k)
				if (!(*rs)[size_t(k)].is_zero())
					r.slot[size_t(k)] =
					    A.add(r.slot[size_t(k)], A.scale(acted, (*rs)[size_t(k)]));
		}
	}
	return r;
}

// A x| H-valued inner product on the free rank-one module E = A tensored
// with H: <x (x) g, y (x) h> = (g_(1)* > <x,y>_A) (x) g_(2)* h, with
// <x,y>_A = x* y
template <class Alg>
CrossedElem<Alg> crossed_inner(const HAction<Alg> &act,
                               const CrossedElem<Alg> &x,
                               const CrossedElem<Alg> &y)
{
	const HopfAlgebra &H = *act.H;
	const Alg &A = *act.A;
	CrossedElem<Alg> r = crossed_zero(act);
	for (int g = 0; g < H.dim; ++g)
	{
		if (A.is_zero(x.slot[size_t(g)]))
			continue;
		if (!H.comult[size_t(g)])
			throw std::runtime_error("crossed inner product needs a total coproduct");
		for (int h = 0; h < H.dim; ++h)
		{
			if (A.is_zero(y.slot[size_t(h)]))
				continue;
			typename Alg::Elem inner =
			    A.mul(A.star_of(x.slot[size_t(g)]), y.slot[size_t(h)]);
			for (auto &t : *H.comult[size_t(g)])
			{
				auto ls = H.apply_star(H.basis_elem(t.left));
				auto rs = H.apply_star(H.basis_elem(t.right));
				if (!ls || !rs)
					throw std::runtime_error(
					    "crossed inner product needs a total *-table");
				typename Alg::Elem acted = A.zero();
				for (int u = 0; u < H.dim; ++u)
					if (!(*ls)[size_t(u)].is_zero())
						acted = A.add(acted, A.scale(act.act_basis(u, inner),
						                             (*ls)[size_t(u)]));
				acted = A.scale(acted, t.coeff.conj());
				auto gh = H.product(*rs, H.basis_elem(h));
				if (!gh)
					throw std::runtime_error(
					    "crossed inner product needs total multiplication");
				for (int k = 0; k < H.dim; ++k)
					if (!(*gh)[size_t(k)].is_zero())
						r.slot[size_t(k)] = A.add(r.slot[size_t(k)],
						                          A.scale(acted, (*gh)[size_t(k)]));
			}
		}
	}
	return r;
}

// ---------------------------------------------------------------------------
// convolution algebra Hom(H, A) and the groups GL(H, A), U(H, A)

template <class Alg> using ConvMap = std::vector<typename Alg::Elem>;

template <class Alg> ConvMap<Alg> conv_unit(const HAction<Alg> &act)
{
	ConvMap<Alg> a(size_t(act.H->dim), act.A->zero());
	for (int i = 0; i < act.H->dim; ++i)
		a[size_t(i)] = act.A->scale(act.A->unit(), act.H->counit[size_t(i)]);
	return a;
}

template <class Alg>
typename Alg::Elem conv_eval(const HAction<Alg> &act, const ConvMap<Alg> &a,
                             const HopfElem &h)
{
	typename Alg::Elem r = act.A->zero();
	for (int i = 0; i < act.H->dim; ++i)
		if (!h[size_t(i)].is_zero())
			r = act.A->add(r, act.A->scale(a[size_t(i)], h[size_t(i)]));
	return r;
}

// (a * b)(h) = a(h_(1)) b(h_(2))
template <class Alg>
ConvMap<Alg> convolution(const HAction<Alg> &act, const ConvMap<Alg> &a,
                         const ConvMap<Alg> &b)
{
	const HopfAlgebra &H = *act.H;
	const Alg &A = *act.A;
	ConvMap<Alg> r(size_t(H.dim), A.zero());
	for (int i = 0; i < H.dim; ++i)
	{
		if (!H.comult[size_t(i)])
			throw std::runtime_error("convolution needs a total coproduct");
		for (auto &t : *H.comult[size_t(i)])
			r[size_t(i)] = A.add(
			    r[size_t(i)],
			    A.scale(A.mul(a[size_t(t.left)], b[size_t(t.right)]), t.coeff));
	}
	return r;
}

template <class Alg>
bool conv_eq(const HAction<Alg> &act, const ConvMap<Alg> &a,
             const ConvMap<Alg> &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		if (!act.A->eq(a[i], b[i]))
			return false;
	return true;
}

struct GLReport
{
	bool normalized = true, cocycle = true, module = true, unitary = true;
	bool in_GL() const { return normalized && cocycle && module; }
	bool in_U() const { return in_GL() && unitary; }
};

// membership in GL(H,A) and U(H,A): normalization a(1_H) = 1_A, the
// cocycle condition a(gh) = a(g_(1)) (g_(2) > a(h)), the module condition
// (h_(1) > b) a(h_(2)) = a(h_(1)) (h_(2) > b) over the probe set, and
// unitarity a(h_(1)) (a(S(h_(2))*))* = eps(h) 1_A
template <class Alg>
GLReport gl_membership(const HAction<Alg> &act, const ConvMap<Alg> &a,
                       const std::vector<typename Alg::Elem> &probes)
{
	const HopfAlgebra &H = *act.H;
	const Alg &A = *act.A;
	GLReport rep;
	rep.normalized = A.eq(conv_eval(act, a, H.unit), A.unit());
	for (int g = 0; g < H.dim && rep.cocycle; ++g)
	{
		if (!H.comult[size_t(g)])
			continue;
		for (int h = 0; h < H.dim && rep.cocycle; ++h)
		{
			if (!H.mult[size_t(g)][size_t(h)])
				continue;
			typename Alg::Elem lhs =
			    conv_eval(act, a, *H.mult[size_t(g)][size_t(h)]);
			typename Alg::Elem rhs = A.zero();
			for (auto &t : *H.comult[size_t(g)])
				rhs = A.add(rhs,
				            A.scale(A.mul(a[size_t(t.left)],
				                          act.act_basis(t.right, a[size_t(h)])),
				                    t.coeff));
			rep.cocycle = A.eq(lhs, rhs);
		}
	}
	for (int h = 0; h < H.dim && rep.module; ++h)
	{
		if (!H.comult[size_t(h)])
			continue;
		for (auto &b : probes)
		{
			typename Alg::Elem lhs = A.zero(), rhs = A.zero();
			for (auto &t : *H.comult[size_t(h)])
			{
				lhs = A.add(lhs, A.scale(A.mul(act.act_basis(t.left, b),
				                               a[size_t(t.right)]),
				                         t.coeff));
				rhs = A.add(rhs, A.scale(A.mul(a[size_t(t.left)],
				                               act.act_basis(t.right, b)),
				                         t.coeff));
			}
			if (!A.eq(lhs, rhs))
			{
				rep.module = false;
				break;
			}
		}
	}
	for (int h = 0; h < H.dim && rep.unitary; ++h)
	{
		if (!H.comult[size_t(h)])
			continue;
		typename Alg::Elem lhs = A.zero();
		bool defined = true;
		for (auto &t : *H.comult[size_t(h)])
		{
			auto s = H.apply_antipode(H.basis_elem(t.right));
			std::optional<HopfElem> ss;
			if (s)
				ss = H.apply_star(*s);
			if (!ss)
			{
				defined = false;
				break;
			}
			lhs = A.add(lhs,
			            A.scale(A.mul(a[size_t(t.left)],
			                          A.star_of(conv_eval(act, a, *ss))),
			                    t.coeff));
		}
		if (defined)
			rep.unitary =
			    A.eq(lhs, A.scale(A.unit(), H.counit[size_t(h)]));
	}
	return rep;
}

// a^{-1}(h) = h_(2) > a(S^{-1}(h_(1)))
template <class Alg>
ConvMap<Alg> conv_inverse(const HAction<Alg> &act, const ConvMap<Alg> &a)
{
	const HopfAlgebra &H = *act.H;
	const Alg &A = *act.A;
	std::vector<HopfElem> sinv = H.antipode_inverse();
	ConvMap<Alg> r(size_t(H.dim), A.zero());
	for (int i = 0; i < H.dim; ++i)
	{
		if (!H.comult[size_t(i)])
			throw std::runtime_error("conv_inverse needs a total coproduct");
		for (auto &t : *H.comult[size_t(i)])
		{
			typename Alg::Elem v = conv_eval(act, a, sinv[size_t(t.left)]);
			r[size_t(i)] =
			    A.add(r[size_t(i)], A.scale(act.act_basis(t.right, v), t.coeff));
		}
	}
	return r;
}

// hat(c)(h) = c (h > c^{-1}) for central invertible c
inline ConvMap<TableAlgebra> hat_map(const HAction<TableAlgebra> &act,
                                     const TableAlgebra::Elem &c)
{
	const TableAlgebra &A = *act.A;
	if (!A.is_central(c))
		throw std::domain_error("hat_map needs a central element");
	TableAlgebra::Elem cinv = A.invert(c);
	ConvMap<TableAlgebra> r(size_t(act.H->dim), A.zero());
	for (int i = 0; i < act.H->dim; ++i)
		r[size_t(i)] = A.mul(c, act.act_basis(i, cinv));
	return r;
}

// Phi^chi(h) = chi(S(h_(1))) h_(2) for a character chi: H -> C,
// returned as a basis table
inline std::vector<HopfElem> char_automorphism(const HopfAlgebra &H,
                                               const std::vector<CScalar> &chi)
{
	std::vector<HopfElem> phi(size_t(H.dim));
	for (int i = 0; i < H.dim; ++i)
	{
		phi[size_t(i)] = HopfElem(size_t(H.dim));
		if (!H.comult[size_t(i)])
			throw std::runtime_error("char_automorphism needs a total coproduct");
		for (auto &t : *H.comult[size_t(i)])
		{
			auto s = H.apply_antipode(H.basis_elem(t.left));
			if (!s)
				throw std::runtime_error("char_automorphism needs a total antipode");
			CScalar cs;
			for (int k = 0; k < H.dim; ++k)
				cs += (*s)[size_t(k)] * chi[size_t(k)];
			for (int k = 0; k < H.dim; ++k)
				phi[size_t(i)][size_t(k)] +=
				    t.coeff * cs * (t.right == k ? CScalar(1) : CScalar());
		}
	}
	return phi;
}

// h-invariance of a star product under an action on the Weyl context:
// h > (f * g) = (h_(1) > f) * (h_(2) > g)
inline InvarianceReport h_invariant_star_check(
    const HAction<WeylAlgebra> &act,
    const std::vector<std::pair<StarElem, StarElem>> &samples)
{
	InvarianceReport rep;
	const HopfAlgebra &H = *act.H;
	const WeylAlgebra &A = *act.A;
	int idx = 0;
	for (auto &[f, g] : samples)
	{
		for (int i = 0; i < H.dim; ++i)
		{
			if (!H.comult[size_t(i)])
				continue;
			StarElem lhs = act.act_basis(i, A.mul(f, g));
			StarElem rhs = A.zero();
			for (auto &t : *H.comult[size_t(i)])
				rhs = rhs + A.mul(act.act_basis(t.left, f),
				                  act.act_basis(t.right, g))
				                .scaled(t.coeff);
			if (!(lhs == rhs))
			{
				rep.invariant = false;
				rep.counterexample = "sample pair #" + std::to_string(idx) +
				                     " at " + H.labels[size_t(i)];
				return rep;
			}
		}
		++idx;
	}
	return rep;
}

} // namespace defq
