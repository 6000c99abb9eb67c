#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace defq {

// Exact rational scalar. mpq_class keeps the canonical form
// gcd(|num|, den) = 1 with den > 0.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
	if (den == 0)
		throw std::invalid_argument("rat: zero denominator");
	Rat r(num, den);
	r.canonicalize();
	return r;
}

inline Rat rat_pow(const Rat &base, long e)
{
	if (e < 0)
	{
		if (base == 0)
			throw std::domain_error("rat_pow: 0^negative");
		return rat_pow(1 / base, -e);
	}
	Rat r = 1, b = base;
	while (e)
	{
		if (e & 1)
			r *= b;
		b *= b;
		e >>= 1;
	}
	return r;
}

// "a/b" or "a"; leading '-' allowed
inline Rat parse_rat(const std::string &s)
{
	Rat r;
	if (r.set_str(s, 10) != 0)
		throw std::invalid_argument("parse_rat: bad literal '" + s + "'");
	r.canonicalize();
	if (r.get_den() < 0)
		throw std::invalid_argument("parse_rat: negative denominator");
	return r;
}

inline std::string to_string(const Rat &r) { return r.get_str(); }

// Element of Q(i), the complex extension of the ordered rationals.
struct CScalar
{
	Rat re = 0, im = 0;

	CScalar() = default;
	CScalar(long n) : re(n) {}
	CScalar(Rat r) : re(std::move(r)) {}
	CScalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

	static CScalar I() { return {Rat(0), Rat(1)}; }

	bool is_zero() const { return re == 0 && im == 0; }
	bool is_real() const { return im == 0; }

	CScalar conj() const { return {re, -im}; }
	Rat norm2() const { return re * re + im * im; }

	friend CScalar operator+(const CScalar &a, const CScalar &b)
	{
		return {a.re + b.re, a.im + b.im};
	}
	friend CScalar operator-(const CScalar &a, const CScalar &b)
	{
		return {a.re - b.re, a.im - b.im};
	}
	friend CScalar operator-(const CScalar &a) { return {-a.re, -a.im}; }
	friend CScalar operator*(const CScalar &a, const CScalar &b)
	{
		return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
	}
	friend CScalar operator/(const CScalar &a, const CScalar &b)
	{
		Rat n = b.norm2();
		if (n == 0)
			throw std::domain_error("CScalar: division by zero");
		CScalar p = a * b.conj();
		return {p.re / n, p.im / n};
	}
	CScalar &operator+=(const CScalar &o) { return *this = *this + o; }
	CScalar &operator-=(const CScalar &o) { return *this = *this - o; }
	CScalar &operator*=(const CScalar &o) { return *this = *this * o; }
	CScalar &operator/=(const CScalar &o) { return *this = *this / o; }

	friend bool operator==(const CScalar &a, const CScalar &b)
	{
		return a.re == b.re && a.im == b.im;
	}

	CScalar inverse() const { return CScalar(1) / *this; }
};

inline bool is_zero(const CScalar &z) { return z.is_zero(); }
inline CScalar conj(const CScalar &z) { return z.conj(); }

inline std::string to_string(const CScalar &z)
{
	if (z.im == 0)
		return to_string(z.re);
	std::string s;
	if (z.re != 0)
		s = to_string(z.re) + (z.im > 0 ? "+" : "");
	if (z.im == 1)
		s += "i";
	else if (z.im == -1)
		s += "-i";
	else
		s += to_string(z.im) + "*i";
	return s;
}

} // namespace defq
