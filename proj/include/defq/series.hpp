#pragma once

#include "defq/rat.hpp"

#include <optional>
#include <vector>

namespace defq {

struct OrderMismatch : std::runtime_error
{
	OrderMismatch() : std::runtime_error("series truncation orders differ") {}
};

struct SingularLeadingTerm : std::runtime_error
{
	SingularLeadingTerm()
	    : std::runtime_error("series has no invertible leading coefficient")
	{
	}
};

// Truncated formal power series in the deformation parameter: coefficients
// c_0..c_N over an exact domain T. All series in one computation share N and
// arithmetic never reads beyond it.
template <class T> struct Series
{
	std::vector<T> c;

	Series() : c(1) {}
	explicit Series(size_t trunc_order) : c(trunc_order + 1) {}
	Series(size_t trunc_order, T constant) : c(trunc_order + 1)
	{
		c[0] = std::move(constant);
	}

	size_t trunc_order() const { return c.size() - 1; }

	static Series lambda_power(size_t trunc_order, size_t k, T coeff = T(1))
	{
		Series s(trunc_order);
		if (k <= trunc_order)
			s.c[k] = std::move(coeff);
		return s;
	}

	bool is_zero() const
	{
		for (auto &x : c)
			if (!defq::is_zero(x))
				return false;
		return true;
	}

	// smallest j with c_j != 0, or nullopt (the +infinity marker) for 0
	std::optional<size_t> order() const
	{
		for (size_t j = 0; j < c.size(); ++j)
			if (!defq::is_zero(c[j]))
				return j;
		return std::nullopt;
	}

	friend Series operator+(const Series &a, const Series &b)
	{
		if (a.trunc_order() != b.trunc_order())
			throw OrderMismatch();
		Series r(a.trunc_order());
		for (size_t j = 0; j < r.c.size(); ++j)
			r.c[j] = a.c[j] + b.c[j];
		return r;
	}
	friend Series operator-(const Series &a, const Series &b)
	{
		if (a.trunc_order() != b.trunc_order())
			throw OrderMismatch();
		Series r(a.trunc_order());
		for (size_t j = 0; j < r.c.size(); ++j)
			r.c[j] = a.c[j] - b.c[j];
		return r;
	}
	friend Series operator-(const Series &a)
	{
		Series r(a.trunc_order());
		for (size_t j = 0; j < r.c.size(); ++j)
			r.c[j] = -a.c[j];
		return r;
	}

	// Cauchy product, closed under truncation
	friend Series operator*(const Series &a, const Series &b)
	{
		if (a.trunc_order() != b.trunc_order())
			throw OrderMismatch();
		Series r(a.trunc_order());
		for (size_t n = 0; n < r.c.size(); ++n)
			for (size_t j = 0; j <= n; ++j)
				r.c[n] = r.c[n] + a.c[j] * b.c[n - j];
		return r;
	}

	Series &operator+=(const Series &o) { return *this = *this + o; }
	Series &operator-=(const Series &o) { return *this = *this - o; }
	Series &operator*=(const Series &o) { return *this = *this * o; }

	friend bool operator==(const Series &a, const Series &b)
	{
		return (a - b).is_zero();
	}

	// shift by one power of lambda (multiplication by lambda)
	Series shift_up() const
	{
		Series r(trunc_order());
		for (size_t j = 1; j < c.size(); ++j)
			r.c[j] = c[j - 1];
		return r;
	}

	// division by lambda; requires order >= 1. The top coefficient of the
	// result is unknowable at this truncation and is set to zero, so callers
	// must work at a truncation margin above what they report.
	Series shift_down() const
	{
		if (!defq::is_zero(c[0]))
			throw std::domain_error("series: division by lambda needs order >= 1");
		Series r(trunc_order());
		for (size_t j = 0; j + 1 < c.size(); ++j)
			r.c[j] = c[j + 1];
		return r;
	}
};

template <class T> bool is_zero(const Series<T> &s) { return s.is_zero(); }

// multiplicative inverse; needs an invertible constant term
template <class T> Series<T> series_invert(const Series<T> &a)
{
	if (defq::is_zero(a.c[0]))
		throw SingularLeadingTerm();
	Series<T> r(a.trunc_order());
	T inv0 = a.c[0].inverse();
	r.c[0] = inv0;
	for (size_t n = 1; n < r.c.size(); ++n)
	{
		T acc{};
		for (size_t j = 1; j <= n; ++j)
			acc = acc + a.c[j] * r.c[n - j];
		r.c[n] = -(inv0 * acc);
	}
	return r;
}

// lambda-adic ultrametric d(a,b) = 2^{-o(a-b)}, with 2^{-inf} = 0
template <class T> Rat lambda_metric(const Series<T> &a, const Series<T> &b)
{
	auto o = (a - b).order();
	if (!o)
		return 0;
	return rat_pow(rat(1, 2), long(*o));
}

using CSeries = Series<CScalar>;

inline std::string to_string(const CSeries &s)
{
	std::string out;
	for (size_t j = 0; j < s.c.size(); ++j)
	{
		if (defq::is_zero(s.c[j]))
			continue;
		if (!out.empty())
			out += " + ";
		out += "(" + to_string(s.c[j]) + ")";
		if (j == 1)
			out += "*lam";
		else if (j > 1)
			out += "*lam^" + std::to_string(j);
	}
	return out.empty() ? "0" : out;
}

} // namespace defq
