#pragma once

#include "defq/star.hpp"

#include <bit>
#include <map>

namespace defq {

namespace fiber {

// resize a truncated series to a new truncation order (extend with zeros or
// drop the tail); used to run Fedosov internals at a margin above the
// reported order, since division by lambda forgets the top coefficient
inline CSeries resize_series(const CSeries &s, size_t order)
{
	CSeries r(order);
	for (size_t j = 0; j <= std::min(order, s.trunc_order()); ++j)
		r.c[j] = s.c[j];
	return r;
}

// sign of dx^A wedge dx^B for disjoint ascending masks; 0 on overlap
inline int merge_sign(uint32_t a, uint32_t b)
{
	if (a & b)
		return 0;
	int inv = 0;
	for (int j = 0; j < 32; ++j)
		if (b & (1u << j))
			inv += std::popcount(a >> (j + 1)); // bits of a past position j
	return (inv % 2) ? -1 : 1;
}

} // namespace fiber

// one basis slot of the formal Weyl algebra W (x) Lambda over R^{2n}:
// base monomial in x, symmetric monomial in y, form mask over dx
struct FiberKey
{
	Monomial base, sym;
	uint32_t form = 0;

	friend auto operator<=>(const FiberKey &, const FiberKey &) = default;
};

struct FiberElem
{
	int dim = 0;      // n; 2n coordinates
	size_t order = 0; // internal lambda truncation
	std::map<FiberKey, CSeries> terms;

	FiberElem() = default;
	FiberElem(int n, size_t ord) : dim(n), order(ord) {}

	bool is_zero() const { return terms.empty(); }

	void add_term(const FiberKey &k, const CSeries &s)
	{
		if (s.is_zero())
			return;
		auto it = terms.find(k);
		if (it == terms.end())
			terms.emplace(k, s);
		else
		{
			it->second += s;
			if (it->second.is_zero())
				terms.erase(it);
		}
	}

	friend FiberElem operator+(const FiberElem &a, const FiberElem &b)
	{
		FiberElem r = a;
		for (auto &[k, s] : b.terms)
			r.add_term(k, s);
		return r;
	}
	friend FiberElem operator-(const FiberElem &a, const FiberElem &b)
	{
		FiberElem r = a;
		for (auto &[k, s] : b.terms)
			r.add_term(k, -s);
		return r;
	}
	friend bool operator==(const FiberElem &a, const FiberElem &b)
	{
		return (a - b).is_zero();
	}

	FiberElem scaled(const CSeries &s) const
	{
		FiberElem r(dim, order);
		for (auto &[k, t] : terms)
			r.add_term(k, t * s);
		return r;
	}
	FiberElem scaled(const CScalar &c) const
	{
		return scaled(CSeries(order, c));
	}

	static FiberElem from_star(const StarElem &f, size_t order)
	{
		FiberElem r(f.dim, order);
		for (auto &[m, s] : f.terms)
			r.add_term({m, Monomial(2 * f.dim), 0}, fiber::resize_series(s, order));
		return r;
	}
};

// graded-commutative (undeformed) product mu
inline FiberElem fiber_wedge(const FiberElem &a, const FiberElem &b)
{
	FiberElem r(a.dim, a.order);
	for (auto &[ka, sa] : a.terms)
		for (auto &[kb, sb] : b.terms)
		{
			int sign = fiber::merge_sign(ka.form, kb.form);
			if (sign == 0)
				continue;
			FiberKey k{ka.base.times(kb.base), ka.sym.times(kb.sym),
			           ka.form | kb.form};
			CSeries s = sa * sb;
			if (sign < 0)
				s = -s;
			r.add_term(k, s);
		}
	return r;
}

// d/dy^v
inline FiberElem fiber_dsym(const FiberElem &a, int v)
{
	FiberElem r(a.dim, a.order);
	for (auto &[k, s] : a.terms)
	{
		if (k.sym.e[size_t(v)] == 0)
			continue;
		FiberKey d = k;
		d.sym.e[size_t(v)] -= 1;
		r.add_term(d, s * CSeries(a.order, CScalar(rat(long(k.sym.e[size_t(v)])))));
	}
	return r;
}

// delta(f (x) alpha) = dx^i ^ (df/dy^i (x) alpha)
inline FiberElem fiber_delta(const FiberElem &a)
{
	FiberElem r(a.dim, a.order);
	for (auto &[k, s] : a.terms)
		for (int v = 0; v < 2 * a.dim; ++v)
		{
			if (k.sym.e[size_t(v)] == 0 || (k.form & (1u << v)))
				continue;
			FiberKey d = k;
			d.sym.e[size_t(v)] -= 1;
			d.form |= 1u << v;
			int sign = fiber::merge_sign(1u << v, k.form);
			CSeries c = s * CSeries(a.order, CScalar(rat(long(k.sym.e[size_t(v)]))));
			r.add_term(d, sign < 0 ? -c : c);
		}
	return r;
}

// delta*(f (x) alpha) = y^i (f (x) i(d_i) alpha)
inline FiberElem fiber_delta_star(const FiberElem &a)
{
	FiberElem r(a.dim, a.order);
	for (auto &[k, s] : a.terms)
		for (int v = 0; v < 2 * a.dim; ++v)
		{
			if (!(k.form & (1u << v)))
				continue;
			FiberKey d = k;
			d.form &= ~(1u << v);
			d.sym.e[size_t(v)] += 1;
			int sign = fiber::merge_sign(1u << v, d.form); // move dx^v to the front
			r.add_term(d, sign < 0 ? -s : s);
		}
	return r;
}

// delta^{-1} = delta*/(deg_s + deg_a) on bihomogeneous pieces, 0 on (0,0)
inline FiberElem fiber_delta_inv(const FiberElem &a)
{
	FiberElem r(a.dim, a.order);
	for (auto &[k, s] : a.terms)
	{
		int nm = k.sym.degree() + std::popcount(k.form);
		if (nm == 0)
			continue;
		FiberElem one_term(a.dim, a.order);
		one_term.add_term(k, s);
		r = r + fiber_delta_star(one_term).scaled(CScalar(rat(1, nm)));
	}
	return r;
}

// projection to deg_s = deg_a = 0
inline FiberElem fiber_sigma(const FiberElem &a)
{
	FiberElem r(a.dim, a.order);
	for (auto &[k, s] : a.terms)
		if (k.sym.degree() == 0 && k.form == 0)
			r.add_term(k, s);
	return r;
}

inline StarElem fiber_to_star(const FiberElem &a, size_t order)
{
	StarElem f(a.dim, order);
	for (auto &[k, s] : a.terms)
	{
		if (k.sym.degree() != 0 || k.form != 0)
			throw std::domain_error("fiber element is not basic");
		f.add_term(k.base, fiber::resize_series(s, order));
	}
	return f;
}

// flat connection D = dx^i ^ d/dx^i on base coefficients
inline FiberElem fiber_D(const FiberElem &a)
{
	FiberElem r(a.dim, a.order);
	for (auto &[k, s] : a.terms)
		for (int v = 0; v < 2 * a.dim; ++v)
		{
			if (k.base.e[size_t(v)] == 0 || (k.form & (1u << v)))
				continue;
			FiberKey d = k;
			d.base.e[size_t(v)] -= 1;
			d.form |= 1u << v;
			int sign = fiber::merge_sign(1u << v, k.form);
			CSeries c = s * CSeries(a.order, CScalar(rat(long(k.base.e[size_t(v)]))));
			r.add_term(d, sign < 0 ? -c : c);
		}
	return r;
}

struct BadSymplecticData : std::runtime_error
{
	BadSymplecticData(const std::string &w) : std::runtime_error(w) {}
};

// flat symplectic vector space R^{2n}: constant omega, Poisson tensor
// Lambda = -omega^{-1}, optional central two-form series Omega with
// vanishing lambda^0 part; the curvature is zero throughout
struct SymplecticData
{
	int dim = 0; // n
	Mat omega, Lambda;
	// Omega as a fiber element: base 1, sym 0, two-form entries
	FiberElem Omega;
	size_t order = 0; // internal truncation for all fiber computations

	SymplecticData(int n, size_t internal_order, Mat om,
	               std::vector<std::pair<size_t, Mat>> Omega_coeffs = {})
	    : dim(n), omega(std::move(om)), Omega(n, internal_order),
	      order(internal_order)
	{
		if (omega.rows != 2 * n || omega.cols != 2 * n)
			throw BadSymplecticData("omega has wrong shape");
		if (!(omega.transpose() == CScalar(-1) * omega))
			throw BadSymplecticData("omega is not antisymmetric");
		Lambda = CScalar(-1) * mat_inverse(omega);
		for (auto &[pow, m] : Omega_coeffs)
		{
			if (pow == 0)
				throw BadSymplecticData("Omega must vanish at lambda^0");
			if (!(m.transpose() == CScalar(-1) * m))
				throw BadSymplecticData("Omega coefficient is not antisymmetric");
			if (pow > internal_order)
				continue;
			for (int i = 0; i < 2 * n; ++i)
				for (int j = i + 1; j < 2 * n; ++j)
					if (!m(i, j).is_zero())
						Omega.add_term(
						    {Monomial(2 * n), Monomial(2 * n),
						     (1u << i) | (1u << j)},
						    CSeries::lambda_power(internal_order, pow, m(i, j)));
		}
	}

	static SymplecticData canonical(int n, size_t internal_order,
	                                std::vector<std::pair<size_t, Mat>> Omega_coeffs = {})
	{
		Mat om = LinearMap::canonical_J(n); // omega(q_i, p_i) = +1
		return SymplecticData(n, internal_order, std::move(om),
		                      std::move(Omega_coeffs));
	}
};

// fiberwise Weyl-Moyal product
// a o b = mu o exp((i lambda / 2) Lambda^{kl} d_{y^k} (x) d_{y^l})
inline FiberElem fiber_mul(const SymplecticData &data, const FiberElem &a,
                           const FiberElem &b)
{
	struct Pair
	{
		FiberElem l, r;
	};
	std::vector<Pair> cur{{a, b}};
	FiberElem acc = fiber_wedge(a, b);
	CScalar half_i = CScalar::I() * CScalar(rat(1, 2));
	for (size_t step = 1; step <= a.order; ++step)
	{
		std::vector<Pair> next;
		for (auto &p : cur)
			for (int k = 0; k < 2 * data.dim; ++k)
			{
				FiberElem dl = fiber_dsym(p.l, k);
				if (dl.is_zero())
					continue;
				for (int l = 0; l < 2 * data.dim; ++l)
				{
					if (data.Lambda(k, l).is_zero())
						continue;
					FiberElem dr = fiber_dsym(p.r, l);
					if (dr.is_zero())
						continue;
					CSeries w = CSeries::lambda_power(
					    a.order, 1,
					    half_i * data.Lambda(k, l) / CScalar(rat(long(step))));
					next.push_back({dl.scaled(w), dr});
				}
			}
		if (next.empty())
			break;
		for (auto &p : next)
			acc = acc + fiber_wedge(p.l, p.r);
		cur = std::move(next);
	}
	return acc;
}

inline int fiber_form_degree(const FiberElem &a)
{
	int d = 0;
	for (auto &[k, s] : a.terms)
		d = std::max(d, std::popcount(k.form));
	return d;
}

// graded commutator [a, b] with respect to the fiber product and the
// antisymmetric (form) degree of a's top component
inline FiberElem fiber_comm(const SymplecticData &data, const FiberElem &a,
                            const FiberElem &b, int deg_a, int deg_b)
{
	FiberElem ab = fiber_mul(data, a, b);
	FiberElem ba = fiber_mul(data, b, a);
	if ((deg_a * deg_b) % 2)
		return ab + ba;
	return ab - ba;
}

// (i/lambda) ad(r): the commutator must have lambda-order >= 1; the series
// division asserts this
inline FiberElem fiber_ad_r_over_lambda(const SymplecticData &data,
                                        const FiberElem &r, const FiberElem &a,
                                        int deg_a)
{
	FiberElem c = fiber_comm(data, r, a, 1, deg_a);
	FiberElem out(a.dim, a.order);
	for (auto &[k, s] : c.terms)
		out.add_term(k, s.shift_down() * CSeries(a.order, CScalar::I()));
	return out;
}

namespace fiber {

// drop sym-degree > cap terms: they cannot reach deg_s = 0 within the
// lambda budget (every y-pairing in the fiber product costs one lambda)
inline FiberElem sym_cap(const FiberElem &a, int cap)
{
	FiberElem r(a.dim, a.order);
	for (auto &[k, s] : a.terms)
		if (k.sym.degree() <= cap)
			r.add_term(k, s);
	return r;
}

} // namespace fiber

struct RecursionDiverges : std::runtime_error
{
	RecursionDiverges()
	    : std::runtime_error("Fedosov fixed point did not stabilize")
	{
	}
};

// the unique r in W (x) Lambda^1 with
//   delta r = D r + (i/lambda) r o r + Omega,  delta^{-1} r = 0
// (flat case, R = 0), as a fixed point of r = delta^{-1}(...)
inline FiberElem fedosov_r(const SymplecticData &data)
{
	int cap = int(data.order) + 2;
	FiberElem r(data.dim, data.order);
	for (size_t iter = 0; iter <= 4 * data.order + 16; ++iter)
	{
		FiberElem rhs = fiber_D(r) + data.Omega;
		if (!r.is_zero())
		{
			// (i/lambda) r o r = (i/(2 lambda)) [r, r] for the odd element r
			FiberElem rr = fiber_mul(data, r, r);
			FiberElem div(data.dim, data.order);
			for (auto &[k, s] : rr.terms)
				div.add_term(k, s.shift_down() * CSeries(data.order, CScalar::I()));
			rhs = rhs + div;
		}
		FiberElem next = fiber::sym_cap(fiber_delta_inv(rhs), cap);
		if (next == r)
			return r;
		r = next;
	}
	throw RecursionDiverges();
}

// tau(f) = sum_k (delta^{-1} (D + (i/lambda) ad(r)))^k f; terminates for
// polynomial f because each step raises the total degree
inline FiberElem fedosov_taylor(const SymplecticData &data, const FiberElem &r,
                                const StarElem &f)
{
	int cap = int(data.order) + f.degree() + 2;
	FiberElem term = FiberElem::from_star(f, data.order);
	FiberElem acc = term;
	for (size_t iter = 0; iter <= 4 * data.order + size_t(f.degree()) + 16;
	     ++iter)
	{
		FiberElem step = fiber_D(term);
		if (!r.is_zero())
			step = step + fiber_ad_r_over_lambda(data, r, term, 0);
		term = fiber::sym_cap(fiber_delta_inv(step), cap);
		if (term.is_zero())
			return acc;
		acc = acc + term;
	}
	throw RecursionDiverges();
}

// f * g = sigma(tau(f) o tau(g)); internal work happens at data.order,
// the result is reported at out_order
inline StarElem fedosov_star(const SymplecticData &data, const StarElem &f,
                             const StarElem &g, size_t out_order)
{
	f.check_compatible(g);
	if (f.chart != Chart::real)
		throw ChartMismatch("Fedosov products act in the real chart");
	if (f.dim != data.dim)
		throw DimMismatch();
	FiberElem r = fedosov_r(data);
	FiberElem tf = fedosov_taylor(data, r, f);
	FiberElem tg = fedosov_taylor(data, r, g);
	return fiber_to_star(fiber_sigma(fiber_mul(data, tf, tg)), out_order);
}

// convenience wrapper choosing the internal truncation margin
inline StarElem fedosov_star_flat(const StarElem &f, const StarElem &g,
                                  std::vector<std::pair<size_t, Mat>> Omega_coeffs = {})
{
	SymplecticData data =
	    SymplecticData::canonical(f.dim, 2 * f.order + 4, std::move(Omega_coeffs));
	return fedosov_star(data, f, g, f.order);
}

// the Fedosov derivation -delta + D + (i/lambda) ad(r) on a form-graded
// element; used by the D^2 = 0 sample checks
inline FiberElem fedosov_derivation(const SymplecticData &data,
                                    const FiberElem &r, const FiberElem &a,
                                    int deg_a)
{
	FiberElem out = fiber_D(a) - fiber_delta(a);
	if (!r.is_zero())
		out = out + fiber_ad_r_over_lambda(data, r, a, deg_a);
	return out;
}

} // namespace defq
