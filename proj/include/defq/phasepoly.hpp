#pragma once

#include "defq/matrix.hpp"
#include "defq/series.hpp"

#include <compare>
#include <map>

namespace defq {

struct DimMismatch : std::runtime_error
{
	DimMismatch() : std::runtime_error("phase-space dimensions differ") {}
};

struct ChartMismatch : std::runtime_error
{
	ChartMismatch(const char *what = "coordinate charts differ")
	    : std::runtime_error(what)
	{
	}
};

// real chart: variables q^1..q^n, p_1..p_n; complex chart: z^1..z^n,
// zbar^1..zbar^n in the same slots, z^i = q^i + i p_i
enum class Chart
{
	real,
	complex
};

// exponent vector over the 2n coordinates, q-block (or z-block) first
struct Monomial
{
	std::vector<uint32_t> e;

	Monomial() = default;
	explicit Monomial(int n2) : e(n2) {}

	int degree() const
	{
		int d = 0;
		for (auto x : e)
			d += int(x);
		return d;
	}

	Monomial times(const Monomial &o) const
	{
		Monomial r = *this;
		for (size_t i = 0; i < e.size(); ++i)
			r.e[i] += o.e[i];
		return r;
	}

	friend auto operator<=>(const Monomial &a, const Monomial &b) = default;
};

// Commutative polynomial on T*R^n with Q(i) coefficients.
struct PhasePoly
{
	int dim = 0; // n
	std::map<Monomial, CScalar> terms;

	PhasePoly() = default;
	explicit PhasePoly(int n) : dim(n) {}

	bool is_zero() const { return terms.empty(); }

	void add_term(const Monomial &m, const CScalar &c)
	{
		if (c.is_zero())
			return;
		auto it = terms.find(m);
		if (it == terms.end())
			terms.emplace(m, c);
		else
		{
			it->second += c;
			if (it->second.is_zero())
				terms.erase(it);
		}
	}

	friend PhasePoly operator+(const PhasePoly &a, const PhasePoly &b)
	{
		if (a.dim && b.dim && a.dim != b.dim)
			throw DimMismatch();
		PhasePoly r = a.dim ? a : b;
		const PhasePoly &o = a.dim ? b : a;
		for (auto &[m, c] : o.terms)
			r.add_term(m, c);
		return r;
	}
	friend PhasePoly operator-(const PhasePoly &a, const PhasePoly &b)
	{
		PhasePoly nb = b;
		for (auto &[m, c] : nb.terms)
			c = -c;
		return a + nb;
	}
	friend PhasePoly operator*(const PhasePoly &a, const PhasePoly &b)
	{
		if (a.dim && b.dim && a.dim != b.dim)
			throw DimMismatch();
		PhasePoly r(a.dim ? a.dim : b.dim);
		for (auto &[ma, ca] : a.terms)
			for (auto &[mb, cb] : b.terms)
				r.add_term(ma.times(mb), ca * cb);
		return r;
	}
	friend bool operator==(const PhasePoly &a, const PhasePoly &b)
	{
		return (a - b).is_zero();
	}

	PhasePoly inverse() const
	{
		// only constants are invertible; enough for Series<PhasePoly>
		if (terms.size() != 1 || terms.begin()->first.degree() != 0)
			throw std::domain_error("PhasePoly: not an invertible constant");
		PhasePoly r(dim);
		r.add_term(terms.begin()->first, terms.begin()->second.inverse());
		return r;
	}
};

inline bool is_zero(const PhasePoly &p) { return p.is_zero(); }

// Element of Pol(T*R^n)[[lambda]]: sparse monomial map with truncated
// series coefficients, all sharing one truncation order.
struct StarElem
{
	int dim = 0;
	size_t order = 0; // lambda truncation
	Chart chart = Chart::real;
	std::map<Monomial, CSeries> terms;

	StarElem() = default;
	StarElem(int n, size_t trunc_order, Chart ch = Chart::real)
	    : dim(n), order(trunc_order), chart(ch)
	{
	}

	bool is_zero() const { return terms.empty(); }

	int degree() const
	{
		int d = 0;
		for (auto &[m, c] : terms)
			d = std::max(d, m.degree());
		return d;
	}

	void add_term(const Monomial &m, const CSeries &s)
	{
		if (s.is_zero())
			return;
		auto it = terms.find(m);
		if (it == terms.end())
			terms.emplace(m, s);
		else
		{
			it->second += s;
			if (it->second.is_zero())
				terms.erase(it);
		}
	}

	static StarElem constant(int n, size_t order, CScalar c,
	                         Chart ch = Chart::real)
	{
		StarElem f(n, order, ch);
		f.add_term(Monomial(2 * n), CSeries(order, std::move(c)));
		return f;
	}
	static StarElem one(int n, size_t order, Chart ch = Chart::real)
	{
		return constant(n, order, CScalar(1), ch);
	}
	// coordinate function for slot v in 0..2n-1
	static StarElem coordinate(int n, size_t order, int v,
	                           Chart ch = Chart::real)
	{
		StarElem f(n, order, ch);
		Monomial m(2 * n);
		m.e[v] = 1;
		f.add_term(m, CSeries(order, CScalar(1)));
		return f;
	}

	void check_compatible(const StarElem &o) const
	{
		if (dim != o.dim)
			throw DimMismatch();
		if (order != o.order)
			throw OrderMismatch();
		if (chart != o.chart)
			throw ChartMismatch();
	}

	friend StarElem operator+(const StarElem &a, const StarElem &b)
	{
		a.check_compatible(b);
		StarElem r = a;
		for (auto &[m, s] : b.terms)
			r.add_term(m, s);
		return r;
	}
	friend StarElem operator-(const StarElem &a, const StarElem &b)
	{
		a.check_compatible(b);
		StarElem r = a;
		for (auto &[m, s] : b.terms)
			r.add_term(m, -s);
		return r;
	}
	friend StarElem operator-(const StarElem &a)
	{
		StarElem r = a;
		for (auto &[m, s] : r.terms)
			s = -s;
		return r;
	}
	// pointwise (undeformed commutative) product
	friend StarElem operator*(const StarElem &a, const StarElem &b)
	{
		a.check_compatible(b);
		StarElem r(a.dim, a.order, a.chart);
		for (auto &[ma, sa] : a.terms)
			for (auto &[mb, sb] : b.terms)
				r.add_term(ma.times(mb), sa * sb);
		return r;
	}
	friend bool operator==(const StarElem &a, const StarElem &b)
	{
		return (a - b).is_zero();
	}

	StarElem scaled(const CSeries &s) const
	{
		StarElem r(dim, order, chart);
		for (auto &[m, t] : terms)
			r.add_term(m, t * s);
		return r;
	}
	StarElem scaled(const CScalar &c) const
	{
		return scaled(CSeries(order, c));
	}

	// lambda^0 part as a PhasePoly
	PhasePoly classical() const
	{
		PhasePoly p(dim);
		for (auto &[m, s] : terms)
			p.add_term(m, s.c[0]);
		return p;
	}

	std::optional<size_t> lambda_order() const
	{
		std::optional<size_t> o;
		for (auto &[m, s] : terms)
		{
			auto so = s.order();
			if (so && (!o || *so < *o))
				o = so;
		}
		return o;
	}
};

inline StarElem from_phasepoly(const PhasePoly &p, size_t order,
                               Chart ch = Chart::real)
{
	StarElem f(p.dim, order, ch);
	for (auto &[m, c] : p.terms)
		f.add_term(m, CSeries(order, c));
	return f;
}

// partial derivative in slot v (0..2n-1)
inline StarElem partial(const StarElem &f, int v)
{
	StarElem r(f.dim, f.order, f.chart);
	for (auto &[m, s] : f.terms)
	{
		if (m.e[v] == 0)
			continue;
		Monomial d = m;
		d.e[v] -= 1;
		r.add_term(d, s * CSeries(f.order, CScalar(rat(long(m.e[v])))));
	}
	return r;
}

// complex conjugation; antilinear, swaps z and zbar in the complex chart
inline StarElem conj(const StarElem &f)
{
	StarElem r(f.dim, f.order, f.chart);
	for (auto &[m, s] : f.terms)
	{
		Monomial mm = m;
		if (f.chart == Chart::complex)
			for (int i = 0; i < f.dim; ++i)
				std::swap(mm.e[i], mm.e[f.dim + i]);
		CSeries cs(f.order);
		for (size_t j = 0; j <= f.order; ++j)
			cs.c[j] = s.c[j].conj();
		r.add_term(mm, cs);
	}
	return r;
}

// {f,g} = sum_i d_q f d_p g - d_p f d_q g, so that {q,p} = +1
inline StarElem poisson(const StarElem &f, const StarElem &g)
{
	f.check_compatible(g);
	if (f.chart != Chart::real)
		throw ChartMismatch("poisson bracket needs the real chart");
	StarElem r(f.dim, f.order, f.chart);
	for (int i = 0; i < f.dim; ++i)
	{
		r = r + partial(f, i) * partial(g, f.dim + i);
		r = r - partial(f, f.dim + i) * partial(g, i);
	}
	return r;
}

// substitute coordinate v -> images[v] for every v
inline StarElem substitute(const StarElem &f,
                           const std::vector<StarElem> &images)
{
	assert(int(images.size()) == 2 * f.dim);
	Chart out = images.empty() ? f.chart : images[0].chart;
	StarElem r(f.dim, f.order, out);
	for (auto &[m, s] : f.terms)
	{
		StarElem t = StarElem::one(f.dim, f.order, out);
		for (int v = 0; v < 2 * f.dim; ++v)
			for (uint32_t k = 0; k < m.e[v]; ++k)
				t = t * images[v];
		r = r + t.scaled(s);
	}
	return r;
}

// q^i = (z^i + zbar^i)/2, p_i = (z^i - zbar^i)/(2i)
inline StarElem to_complex(const StarElem &f)
{
	if (f.chart == Chart::complex)
		return f;
	int n = f.dim;
	std::vector<StarElem> img;
	CScalar half(rat(1, 2));
	CScalar half_over_i = half / CScalar::I();
	for (int i = 0; i < n; ++i)
		img.push_back((StarElem::coordinate(n, f.order, i, Chart::complex) +
	                   StarElem::coordinate(n, f.order, n + i, Chart::complex))
	                      .scaled(half));
	for (int i = 0; i < n; ++i)
		img.push_back((StarElem::coordinate(n, f.order, i, Chart::complex) -
	                   StarElem::coordinate(n, f.order, n + i, Chart::complex))
	                      .scaled(half_over_i));
	return substitute(f, img);
}

// z^i = q^i + i p_i, zbar^i = q^i - i p_i
inline StarElem to_real(const StarElem &f)
{
	if (f.chart == Chart::real)
		return f;
	int n = f.dim;
	std::vector<StarElem> img;
	for (int i = 0; i < n; ++i)
		img.push_back(StarElem::coordinate(n, f.order, i) +
		              StarElem::coordinate(n, f.order, n + i)
		                  .scaled(CScalar::I()));
	for (int i = 0; i < n; ++i)
		img.push_back(StarElem::coordinate(n, f.order, i) -
		              StarElem::coordinate(n, f.order, n + i)
		                  .scaled(CScalar::I()));
	return substitute(f, img);
}

// Invertible linear coordinate transformation on R^{2n}.
struct LinearMap
{
	Mat matrix; // 2n x 2n over Q(i)

	explicit LinearMap(Mat m) : matrix(std::move(m))
	{
		assert(matrix.rows == matrix.cols);
	}

	int n() const { return matrix.rows / 2; }

	static Mat canonical_J(int n)
	{
		Mat J(2 * n, 2 * n);
		for (int i = 0; i < n; ++i)
		{
			J(i, n + i) = CScalar(1);
			J(n + i, i) = CScalar(-1);
		}
		return J;
	}

	bool is_symplectic() const
	{
		Mat J = canonical_J(n());
		return matrix.transpose() * J * matrix == J;
	}
};

// left action g.f = pullback of f by g^{-1}: coordinate x_j maps to the
// j-th component of g^{-1} x
inline StarElem apply_linear(const LinearMap &g, const StarElem &f)
{
	if (f.chart != Chart::real)
		throw ChartMismatch("linear actions act in the real chart");
	Mat inv = mat_inverse(g.matrix);
	int n2 = 2 * f.dim;
	assert(inv.rows == n2);
	std::vector<StarElem> img;
	for (int j = 0; j < n2; ++j)
	{
		StarElem e(f.dim, f.order, f.chart);
		for (int k = 0; k < n2; ++k)
			if (!inv(j, k).is_zero())
				e = e + StarElem::coordinate(f.dim, f.order, k).scaled(inv(j, k));
		img.push_back(std::move(e));
	}
	return substitute(f, img);
}

} // namespace defq
