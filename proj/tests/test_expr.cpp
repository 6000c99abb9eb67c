#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/expr.hpp"
#include "defq/random.hpp"

using namespace defq;

TEST_CASE("basic parsing")
{
	const size_t ORD = 4;
	StarElem q = StarElem::coordinate(1, ORD, 0);
	StarElem p = StarElem::coordinate(1, ORD, 1);
	CHECK(parse_expr("q1", 1, ORD) == q);
	CHECK(parse_expr("q1*p1 + 1/2", 1, ORD) ==
	      q * p + StarElem::constant(1, ORD, CScalar(rat(1, 2))));
	CHECK(parse_expr("q1^3 - p1^2", 1, ORD) == q * q * q - p * p);
	CHECK(parse_expr("-q1", 1, ORD) == -q);
	CHECK(parse_expr("i*q1", 1, ORD) == q.scaled(CScalar::I()));
	CHECK(parse_expr("lam*p1", 1, ORD) ==
	      p.scaled(CSeries::lambda_power(ORD, 1)));
	CHECK(parse_expr("(q1 + p1)^2", 1, ORD) == (q + p) * (q + p));
	// whitespace and newlines are fine
	CHECK(parse_expr(" q1 \n + \t p1 ", 1, ORD) == q + p);
}

TEST_CASE("complex chart parsing")
{
	const size_t ORD = 4;
	StarElem z = StarElem::coordinate(1, ORD, 0, Chart::complex);
	StarElem zb = StarElem::coordinate(1, ORD, 1, Chart::complex);
	StarElem e = parse_expr("z1*zb1", 1, ORD);
	CHECK(e.chart == Chart::complex);
	CHECK(e == z * zb);
	// constants before the first variable inherit the chart
	CHECK(parse_expr("2*zb1", 1, ORD) == zb.scaled(CScalar(2)));
}

TEST_CASE("parse errors carry position")
{
	const size_t ORD = 4;
	CHECK_THROWS_AS(parse_expr("q1 + x3", 1, ORD), ParseError);
	try
	{
		parse_expr("q1 + x3", 1, ORD);
	}
	catch (const ParseError &e)
	{
		CHECK(e.line == 1);
		CHECK(e.col == 6);
	}
	try
	{
		parse_expr("q1 +\n  1/0", 1, ORD);
	}
	catch (const ParseError &e)
	{
		CHECK(e.line == 2);
		CHECK(e.col == 5); // position just after the slash
	}
	CHECK_THROWS_AS(parse_expr("q1 + z1", 1, ORD), ParseError); // mixed charts
	CHECK_THROWS_AS(parse_expr("q2", 1, ORD), ParseError); // index out of range
	CHECK_THROWS_AS(parse_expr("q1 q1", 1, ORD), ParseError); // trailing input
	CHECK_THROWS_AS(parse_expr("", 1, ORD), ParseError);
	CHECK_THROWS_AS(parse_expr("(q1", 1, ORD), ParseError);
}

TEST_CASE("print-parse round trip")
{
	std::mt19937_64 rng(23);
	for (int t = 0; t < 25; ++t)
	{
		int n = 1 + (t % 2);
		StarElem f = random_poly(rng, n, 4, 3, Chart::real, 5);
		CHECK(parse_expr(to_string(f), n, 4) == f);
	}
	for (int t = 0; t < 25; ++t)
	{
		StarElem f = random_poly(rng, 1, 4, 3, Chart::complex, 5);
		if (f.is_zero())
			continue; // "0" parses into the default real chart
		CHECK(parse_expr(to_string(f), 1, 4) == f);
	}
}

TEST_CASE("json round trip")
{
	std::mt19937_64 rng(29);
	for (int t = 0; t < 20; ++t)
	{
		int n = 1 + (t % 3);
		Chart ch = (t % 2) ? Chart::complex : Chart::real;
		StarElem f(n, 5, ch);
		for (int k = 0; k < 4; ++k)
		{
			Monomial m(2 * n);
			for (int d = 0; d < 3; ++d)
				m.e[rng() % uint64_t(2 * n)] += 1;
			f.add_term(m, random_series(rng, 5));
		}
		nlohmann::json j = to_json(f);
		// survives a serialize/deserialize cycle as text
		nlohmann::json j2 = nlohmann::json::parse(j.dump());
		CHECK(from_json(j2) == f);
		CHECK(from_json(j2).chart == f.chart);
	}
}

TEST_CASE("json uses exact rational strings")
{
	StarElem f = StarElem::constant(1, 2, CScalar(rat(1, 3), rat(-2, 7)));
	nlohmann::json j = to_json(f);
	REQUIRE(j["terms"].size() == 1);
	CHECK(j["terms"][0]["re"] == "1/3");
	CHECK(j["terms"][0]["im"] == "-2/7");
	CHECK(j["terms"][0]["lam"] == 0);
	CHECK(j["chart"] == "real");
}
