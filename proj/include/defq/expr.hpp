#pragma once

#include "defq/phasepoly.hpp"

#include "json.hpp"

#include <string>

namespace defq {

struct ParseError : std::runtime_error
{
	int line, col;
	ParseError(int l, int c, const std::string &msg)
	    : std::runtime_error("parse error at " + std::to_string(l) + ":" +
	                         std::to_string(c) + ": " + msg),
	      line(l), col(c)
	{
	}
};

namespace detail {

struct Parser
{
	const std::string &src;
	int dim;
	size_t order;
	size_t pos = 0;
	int line = 1, col = 1;
	std::optional<Chart> seen; // chart inferred from variables

	Parser(const std::string &s, int n, size_t N) : src(s), dim(n), order(N) {}

	[[noreturn]] void fail(const std::string &msg)
	{
		throw ParseError(line, col, msg);
	}

	void advance()
	{
		if (src[pos] == '\n')
		{
			++line;
			col = 1;
		}
		else
			++col;
		++pos;
	}

	void skip_ws()
	{
		while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' ||
		                            src[pos] == '\n' || src[pos] == '\r'))
			advance();
	}

	bool eat(char c)
	{
		skip_ws();
		if (pos < src.size() && src[pos] == c)
		{
			advance();
			return true;
		}
		return false;
	}

	char peek()
	{
		skip_ws();
		return pos < src.size() ? src[pos] : '\0';
	}

	long parse_uint()
	{
		skip_ws();
		if (pos >= src.size() || !isdigit(src[pos]))
			fail("expected a number");
		long v = 0;
		while (pos < src.size() && isdigit(src[pos]))
		{
			v = v * 10 + (src[pos] - '0');
			if (v > 1000000000L)
				fail("number too large");
			advance();
		}
		return v;
	}

	void use_chart(Chart c)
	{
		if (seen && *seen != c)
			fail("expression mixes real (q/p) and complex (z/zb) variables");
		seen = c;
	}

	StarElem atom()
	{
		skip_ws();
		if (pos >= src.size())
			fail("unexpected end of input");
		char c = src[pos];
		if (c == '(')
		{
			advance();
			StarElem e = expr();
			if (!eat(')'))
				fail("expected ')'");
			return e;
		}
		if (c == '-')
		{
			advance();
			return -atom_pow();
		}
		if (isdigit(c))
		{
			long num = parse_uint();
			if (eat('/'))
			{
				int l = line, cl = col;
				long den = parse_uint();
				if (den == 0)
					throw ParseError(l, cl, "zero denominator");
				return StarElem::constant(dim, order, CScalar(rat(num, den)),
				                          chart());
			}
			return StarElem::constant(dim, order, CScalar(rat(num)), chart());
		}
		if (isalpha(c))
		{
			std::string id;
			int l = line, cl = col;
			while (pos < src.size() && (isalnum(src[pos])))
			{
				id += src[pos];
				advance();
			}
			if (id == "lam")
			{
				StarElem e(dim, order, chart());
				e.add_term(Monomial(2 * dim), CSeries::lambda_power(order, 1));
				return e;
			}
			if (id == "i")
				return StarElem::constant(dim, order, CScalar::I(), chart());
			auto split = [&](const std::string &prefix) -> std::optional<int> {
				if (id.size() <= prefix.size() ||
				    id.compare(0, prefix.size(), prefix) != 0)
					return std::nullopt;
				for (size_t k = prefix.size(); k < id.size(); ++k)
					if (!isdigit(id[k]))
						return std::nullopt;
				return std::stoi(id.substr(prefix.size()));
			};
			// zb before z: longest prefix first
			std::string kind;
			int index = 0;
			if (auto v = split("zb"))
			{
				kind = "zb";
				index = *v;
			}
			else if (auto v2 = split("z"))
			{
				kind = "z";
				index = *v2;
			}
			else if (auto v3 = split("q"))
			{
				kind = "q";
				index = *v3;
			}
			else if (auto v4 = split("p"))
			{
				kind = "p";
				index = *v4;
			}
			else
				throw ParseError(l, cl, "unknown identifier '" + id + "'");
			if (index < 1 || index > dim)
				throw ParseError(l, cl, "variable index out of range for dim " +
				                            std::to_string(dim));
			int slot;
			if (kind == "q" || kind == "z")
				slot = index - 1;
			else
				slot = dim + index - 1;
			use_chart(kind == "q" || kind == "p" ? Chart::real : Chart::complex);
			return StarElem::coordinate(dim, order, slot, chart());
		}
		fail(std::string("unexpected character '") + c + "'");
	}

	StarElem atom_pow()
	{
		StarElem base = atom();
		while (eat('^'))
		{
			long e = parse_uint();
			StarElem r = StarElem::one(dim, order, base.chart);
			for (long k = 0; k < e; ++k)
				r = r * base;
			base = std::move(r);
		}
		return base;
	}

	StarElem term()
	{
		StarElem r = atom_pow();
		while (eat('*'))
			r = with_chart(r) * with_chart(atom_pow());
		return r;
	}

	StarElem expr()
	{
		StarElem r = term();
		for (;;)
		{
			if (eat('+'))
				r = with_chart(r) + with_chart(term());
			else if (eat('-'))
				r = with_chart(r) - with_chart(term());
			else
				return r;
		}
	}

	Chart chart() const { return seen.value_or(Chart::real); }

	// constants parsed before any variable default to the real chart;
	// re-tag them once the chart is known
	StarElem with_chart(StarElem e)
	{
		e.chart = chart();
		return e;
	}

	StarElem run()
	{
		StarElem r = expr();
		skip_ws();
		if (pos != src.size())
			fail("trailing input");
		return with_chart(std::move(r));
	}
};

} // namespace detail

inline StarElem parse_expr(const std::string &src, int dim, size_t order)
{
	detail::Parser p(src, dim, order);
	return p.run();
}

// human-readable form, deterministic term order
inline std::string to_string(const StarElem &f)
{
	std::string out;
	for (auto &[m, s] : f.terms)
	{
		std::string mono;
		for (int v = 0; v < 2 * f.dim; ++v)
		{
			if (m.e[size_t(v)] == 0)
				continue;
			std::string name;
			if (f.chart == Chart::real)
				name = (v < f.dim ? "q" : "p") +
				       std::to_string(v < f.dim ? v + 1 : v - f.dim + 1);
			else
				name = (v < f.dim ? "z" : "zb") +
				       std::to_string(v < f.dim ? v + 1 : v - f.dim + 1);
			if (!mono.empty())
				mono += "*";
			mono += name;
			if (m.e[size_t(v)] > 1)
				mono += "^" + std::to_string(m.e[size_t(v)]);
		}
		if (!out.empty())
			out += " + ";
		out += "(" + to_string(s) + ")";
		if (!mono.empty())
			out += "*" + mono;
	}
	return out.empty() ? "0" : out;
}

// JSON term schema: {vars: [...], lam: k, re: "a/b", im: "c/d"};
// rationals serialize as strings so exactness survives
inline nlohmann::json to_json(const StarElem &f)
{
	nlohmann::json terms = nlohmann::json::array();
	for (auto &[m, s] : f.terms)
		for (size_t k = 0; k <= f.order; ++k)
		{
			if (s.c[k].is_zero())
				continue;
			nlohmann::json t;
			t["vars"] = m.e;
			t["lam"] = k;
			t["re"] = to_string(s.c[k].re);
			t["im"] = to_string(s.c[k].im);
			terms.push_back(std::move(t));
		}
	nlohmann::json out;
	out["dim"] = f.dim;
	out["order"] = f.order;
	out["chart"] = f.chart == Chart::real ? "real" : "complex";
	out["terms"] = std::move(terms);
	return out;
}

inline StarElem from_json(const nlohmann::json &j)
{
	StarElem f(j.at("dim").get<int>(), j.at("order").get<size_t>(),
	           j.at("chart").get<std::string>() == "complex" ? Chart::complex
	                                                         : Chart::real);
	for (auto &t : j.at("terms"))
	{
		Monomial m;
		m.e = t.at("vars").get<std::vector<uint32_t>>();
		size_t k = t.at("lam").get<size_t>();
		CScalar c(parse_rat(t.at("re").get<std::string>()),
		          parse_rat(t.at("im").get<std::string>()));
		f.add_term(m, CSeries::lambda_power(f.order, k, c));
	}
	return f;
}

} // namespace defq
