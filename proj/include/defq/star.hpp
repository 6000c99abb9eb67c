#pragma once

#include "defq/phasepoly.hpp"

#include <functional>
#include <string>
#include <variant>

namespace defq {

// Ordering family of a flat star product. kappa(0), kappa(1/2) and
// tkappa(1) coincide with standard, Weyl and Wick as theorems, not as
// aliases: equality of specs is structural.
struct StarSpec
{
	enum class Family
	{
		standard,
		weyl,
		kappa,
		wick,
		tkappa
	};
	Family family = Family::weyl;
	Rat param = 0; // kappa or kappa-tilde

	static StarSpec standard() { return {Family::standard, 0}; }
	static StarSpec weyl() { return {Family::weyl, 0}; }
	static StarSpec kappa(Rat k) { return {Family::kappa, std::move(k)}; }
	static StarSpec wick() { return {Family::wick, 0}; }
	static StarSpec tkappa(Rat k) { return {Family::tkappa, std::move(k)}; }

	bool needs_complex_chart() const
	{
		return family == Family::wick || family == Family::tkappa;
	}

	friend bool operator==(const StarSpec &, const StarSpec &) = default;

	std::string name() const
	{
		switch (family)
		{
		case Family::standard:
			return "std";
		case Family::weyl:
			return "weyl";
		case Family::kappa:
			return "kappa:" + to_string(param);
		case Family::wick:
			return "wick";
		case Family::tkappa:
			return "tkappa:" + to_string(param);
		}
		return "?";
	}
};

namespace detail {

// all multi-indices alpha over n slots with |alpha| = total
inline void enum_multi(int n, int total, std::vector<uint32_t> &cur,
                       const std::function<void(const std::vector<uint32_t> &)> &emit)
{
	if (int(cur.size()) == n - 1)
	{
		cur.push_back(uint32_t(total));
		emit(cur);
		cur.pop_back();
		return;
	}
	for (int k = 0; k <= total; ++k)
	{
		cur.push_back(uint32_t(k));
		enum_multi(n, total - k, cur, emit);
		cur.pop_back();
	}
}

inline Rat factorial(uint32_t k)
{
	Rat r = 1;
	for (uint32_t j = 2; j <= k; ++j)
		r *= long(j);
	return r;
}

inline Rat multi_factorial(const std::vector<uint32_t> &alpha)
{
	Rat r = 1;
	for (auto k : alpha)
		r *= factorial(k);
	return r;
}

// iterated derivative d^alpha with alpha over slots [base, base+n)
inline StarElem deriv_block(const StarElem &f, const std::vector<uint32_t> &alpha,
                            int base)
{
	StarElem r = f;
	for (size_t i = 0; i < alpha.size(); ++i)
		for (uint32_t k = 0; k < alpha[i]; ++k)
		{
			if (r.is_zero())
				return r;
			r = partial(r, base + int(i));
		}
	return r;
}

} // namespace detail

// N_kappa = exp(-i lambda kappa Delta), Delta = sum_k d_q^k d_p_k.
// Finite on polynomials; the lambda power additionally truncates.
inline StarElem neumaier(const Rat &kappa, const StarElem &f)
{
	if (f.chart != Chart::real)
		throw ChartMismatch("Neumaier operator acts in the real chart");
	StarElem acc = f;
	StarElem term = f;
	CScalar c = -(CScalar::I() * CScalar(kappa));
	for (size_t m = 1; m <= f.order; ++m)
	{
		StarElem lap(f.dim, f.order, f.chart);
		for (int i = 0; i < f.dim; ++i)
			lap = lap + partial(partial(term, i), f.dim + i);
		if (lap.is_zero())
			break;
		term = lap.scaled(CSeries::lambda_power(f.order, 1, c / CScalar(rat(long(m)))));
		acc = acc + term;
	}
	return acc;
}

namespace detail {

// sum over alpha: coeff(|a|) / alpha! * (d^alpha_L f) (d^alpha_R g),
// with L/R the slot blocks the derivatives act on
inline StarElem diag_bidiff(const StarElem &f, const StarElem &g, int blockL,
                            int blockR,
                            const std::function<CSeries(int)> &coeff)
{
	StarElem r(f.dim, f.order, f.chart);
	int maxr = f.degree();
	for (int j = 0; j <= maxr; ++j)
	{
		bool any = false;
		std::vector<uint32_t> cur;
		enum_multi(f.dim, j, cur, [&](const std::vector<uint32_t> &alpha) {
			StarElem df = deriv_block(f, alpha, blockL);
			if (df.is_zero())
				return;
			StarElem dg = deriv_block(g, alpha, blockR);
			if (dg.is_zero())
				return;
			any = true;
			CSeries c = coeff(j) * CSeries(f.order, CScalar(1 / multi_factorial(alpha)));
			r = r + (df * dg).scaled(c);
		});
		if (j > 0 && !any)
			break;
	}
	return r;
}

} // namespace detail

// f *_std g = sum_j (-i lambda)^j sum_{|alpha|=j} 1/alpha!
//             (d_p^alpha f)(d_q^alpha g)
inline StarElem star_standard(const StarElem &f, const StarElem &g)
{
	int n = f.dim;
	return detail::diag_bidiff(f, g, n, 0, [&](int j) {
		CScalar c = 1;
		for (int k = 0; k < j; ++k)
			c *= -CScalar::I();
		return CSeries::lambda_power(f.order, size_t(j), c);
	});
}

// f *_W g = sum_{alpha,beta} (i lambda/2)^{|a|+|b|} (-1)^{|b|} / (a! b!)
//           (d_q^a d_p^b f)(d_p^a d_q^b g)
inline StarElem star_weyl_direct(const StarElem &f, const StarElem &g)
{
	int n = f.dim;
	StarElem r(f.dim, f.order, f.chart);
	int maxd = f.degree() + g.degree();
	for (int s = 0; s <= maxd; ++s)
	{
		std::vector<uint32_t> cur;
		detail::enum_multi(n, s, cur, [&](const std::vector<uint32_t> &alpha) {
			StarElem fa = detail::deriv_block(f, alpha, 0);
			StarElem ga = detail::deriv_block(g, alpha, n);
			if (fa.is_zero() || ga.is_zero())
				return;
			for (int t = 0; t + s <= maxd; ++t)
			{
				std::vector<uint32_t> cur2;
				detail::enum_multi(n, t, cur2, [&](const std::vector<uint32_t> &beta) {
					StarElem fab = detail::deriv_block(fa, beta, n);
					if (fab.is_zero())
						return;
					StarElem gab = detail::deriv_block(ga, beta, 0);
					if (gab.is_zero())
						return;
					int rdeg = s + t;
					CScalar c = (t % 2) ? CScalar(-1) : CScalar(1);
					for (int k = 0; k < rdeg; ++k)
						c *= CScalar::I() * CScalar(rat(1, 2));
					c /= CScalar(detail::multi_factorial(alpha) *
					             detail::multi_factorial(beta));
					r = r + (fab * gab).scaled(
					            CSeries::lambda_power(f.order, size_t(rdeg), c));
				});
			}
		});
	}
	return r;
}

namespace detail {

// mu o exp(O) on f (x) g, where O = sum of weighted one-derivative
// tensor steps; independent code path from the closed-sum kernels
struct TensorStep
{
	CScalar weight; // coefficient of lambda
	int left_var, right_var;
};

inline StarElem exp_bidiff(const StarElem &f, const StarElem &g,
                           const std::vector<TensorStep> &steps)
{
	struct Pair
	{
		StarElem l, r;
	};
	std::vector<Pair> cur{{f, g}};
	StarElem acc = f * g;
	for (size_t r = 1; r <= f.order; ++r)
	{
		std::vector<Pair> next;
		for (auto &p : cur)
			for (auto &st : steps)
			{
				StarElem dl = partial(p.l, st.left_var);
				if (dl.is_zero())
					continue;
				StarElem dr = partial(p.r, st.right_var);
				if (dr.is_zero())
					continue;
				CSeries w = CSeries::lambda_power(
				    f.order, 1, st.weight / CScalar(rat(long(r))));
				next.push_back({dl.scaled(w), dr});
			}
		if (next.empty())
			break;
		for (auto &p : next)
			acc = acc + p.l * p.r;
		cur = std::move(next);
	}
	return acc;
}

} // namespace detail

// f *_kappa g = mu o exp(i lambda (kappa P - (1-kappa) P*)),
// P = d_q (x) d_p, P* = d_p (x) d_q
inline StarElem star_kappa(const Rat &kappa, const StarElem &f,
                           const StarElem &g)
{
	int n = f.dim;
	std::vector<detail::TensorStep> steps;
	CScalar ik = CScalar::I() * CScalar(kappa);
	CScalar imk = -(CScalar::I() * CScalar(1 - kappa));
	for (int i = 0; i < n; ++i)
	{
		if (kappa != 0)
			steps.push_back({ik, i, n + i});
		if (kappa != 1)
			steps.push_back({imk, n + i, i});
	}
	return detail::exp_bidiff(f, g, steps);
}

// f *_Wick g = sum_r (2 lambda)^r sum_{|alpha|=r} 1/alpha!
//              (d_z^alpha f)(d_zbar^alpha g)
inline StarElem star_wick(const StarElem &f, const StarElem &g)
{
	int n = f.dim;
	return detail::diag_bidiff(f, g, 0, n, [&](int j) {
		CScalar c = 1;
		for (int k = 0; k < j; ++k)
			c *= CScalar(2);
		return CSeries::lambda_power(f.order, size_t(j), c);
	});
}

// f *_tkappa g = mu o exp((tk+1) lambda Z + (tk-1) lambda Zbar),
// Z = d_z (x) d_zbar, Zbar = d_zbar (x) d_z
inline StarElem star_tkappa(const Rat &tk, const StarElem &f,
                            const StarElem &g)
{
	int n = f.dim;
	std::vector<detail::TensorStep> steps;
	CScalar cz(tk + 1), czb(tk - 1);
	for (int i = 0; i < n; ++i)
	{
		if (!cz.is_zero())
			steps.push_back({cz, i, n + i});
		if (!czb.is_zero())
			steps.push_back({czb, n + i, i});
	}
	return detail::exp_bidiff(f, g, steps);
}

inline StarElem star(const StarSpec &spec, const StarElem &f,
                     const StarElem &g)
{
	f.check_compatible(g);
	if (spec.needs_complex_chart())
	{
		if (f.chart != Chart::complex)
			throw ChartMismatch("Wick-family products need the complex chart");
	}
	else if (f.chart != Chart::real)
		throw ChartMismatch("q/p-ordered products need the real chart");
	switch (spec.family)
	{
	case StarSpec::Family::standard:
		return star_standard(f, g);
	case StarSpec::Family::weyl:
		return star_weyl_direct(f, g);
	case StarSpec::Family::kappa:
		return star_kappa(spec.param, f, g);
	case StarSpec::Family::wick:
		return star_wick(f, g);
	case StarSpec::Family::tkappa:
		return star_tkappa(spec.param, f, g);
	}
	throw std::logic_error("unknown star family");
}

// f *_kappa g = N_kappa^{-1}(N_kappa f *_std N_kappa g), N_kappa^{-1} = N_{-kappa}
inline StarElem star_via_equivalence(const Rat &kappa, const StarElem &f,
                                     const StarElem &g)
{
	return neumaier(-kappa, star_standard(neumaier(kappa, f), neumaier(kappa, g)));
}

inline StarElem star_commutator(const StarSpec &spec, const StarElem &f,
                                const StarElem &g)
{
	return star(spec, f, g) - star(spec, g, f);
}

// OpenMP split of the left factor's terms across threads; each chunk runs
// the serial kernel, partial sums merge in slab order
StarElem star_parallel(const StarSpec &spec, const StarElem &f,
                       const StarElem &g);

struct InvarianceReport
{
	bool invariant = true;
	std::string counterexample;
};

// checks g.(f*h) = (g.f)*(g.h) on the sample set; complex-chart products
// are transported through the real chart
inline InvarianceReport invariance_check(const LinearMap &g,
                                         const StarSpec &spec,
                                         const std::vector<std::pair<StarElem, StarElem>> &samples)
{
	InvarianceReport rep;
	auto act = [&](const StarElem &f) {
		if (f.chart == Chart::real)
			return apply_linear(g, f);
		return to_complex(apply_linear(g, to_real(f)));
	};
	int idx = 0;
	for (auto &[f, h] : samples)
	{
		StarElem lhs = act(star(spec, f, h));
		StarElem rhs = star(spec, act(f), act(h));
		if (!(lhs == rhs))
		{
			rep.invariant = false;
			rep.counterexample = "sample pair #" + std::to_string(idx);
			return rep;
		}
		++idx;
	}
	return rep;
}

} // namespace defq

#ifdef _OPENMP
#include <omp.h>
#endif

namespace defq {

inline StarElem star_parallel(const StarSpec &spec, const StarElem &f,
                              const StarElem &g)
{
	std::vector<std::pair<Monomial, CSeries>> items(f.terms.begin(),
	                                                f.terms.end());
	int nthreads = 1;
#ifdef _OPENMP
	nthreads = omp_get_max_threads();
#endif
	int slabs = std::max(1, std::min<int>(nthreads, int(items.size())));
	std::vector<StarElem> part(size_t(slabs), StarElem(f.dim, f.order, f.chart));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
	for (int s = 0; s < slabs; ++s)
	{
		StarElem chunk(f.dim, f.order, f.chart);
		for (size_t k = size_t(s); k < items.size(); k += size_t(slabs))
			chunk.add_term(items[k].first, items[k].second);
		part[size_t(s)] = star(spec, chunk, g);
	}
	StarElem acc(f.dim, f.order, f.chart);
	for (auto &p : part)
		acc = acc + p;
	return acc;
}

} // namespace defq
