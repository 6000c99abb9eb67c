#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defq/matrix.hpp"
#include "defq/series.hpp"

using namespace defq;

TEST_CASE("rationals canonicalize")
{
	CHECK(rat(2, 4) == rat(1, 2));
	CHECK(rat(-3, -6) == rat(1, 2));
	CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
	CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
	CHECK(rat_pow(rat(2), -2) == rat(1, 4));
	CHECK(parse_rat("-7/3") == rat(-7, 3));
	CHECK(to_string(rat(-7, 3)) == "-7/3");
	CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("gaussian rationals")
{
	CScalar i = CScalar::I();
	CHECK(i * i == CScalar(-1));
	CHECK(i.conj() == -i);
	CScalar z(rat(1, 2), rat(3));
	CHECK(z * z.inverse() == CScalar(1));
	CHECK((z / z) == CScalar(1));
	CHECK(z.norm2() == rat(1, 4) + rat(9));
	CHECK_THROWS_AS(CScalar().inverse(), std::domain_error);
	CHECK(to_string(CScalar(rat(1, 2), rat(-1))) == "1/2-i");
}

TEST_CASE("series arithmetic is closed under truncation")
{
	CSeries a = CSeries::lambda_power(3, 1); // lam
	CSeries one(3, CScalar(1));
	CSeries prod = a * a * a * a; // lam^4 truncates away
	CHECK(prod.is_zero());
	CHECK((a * a).order() == size_t(2));
	CHECK(one.order() == size_t(0));
	CHECK(!CSeries(3).order().has_value());
	CHECK_THROWS_AS(one + CSeries(5), OrderMismatch);
}

TEST_CASE("lambda shifts")
{
	CSeries a = CSeries::lambda_power(3, 1, CScalar(5));
	CHECK(a.shift_up() == CSeries::lambda_power(3, 2, CScalar(5)));
	CHECK(a.shift_down() == CSeries(3, CScalar(5)));
	CHECK_THROWS_AS(CSeries(3, CScalar(1)).shift_down(), std::domain_error);
	// the top coefficient is forgotten on the way down
	CSeries top = CSeries::lambda_power(3, 3);
	CHECK(top.shift_up().shift_down().is_zero());
}

TEST_CASE("series inversion")
{
	CSeries a(4, CScalar(1));
	a.c[1] = CScalar(-1); // 1 - lam
	CSeries inv = series_invert(a);
	for (size_t j = 0; j <= 4; ++j)
		CHECK(inv.c[j] == CScalar(1)); // geometric series
	CHECK(a * inv == CSeries(4, CScalar(1)));
	CHECK_THROWS_AS(series_invert(CSeries::lambda_power(4, 1)),
	                SingularLeadingTerm);
}

TEST_CASE("lambda-adic metric")
{
	CSeries a = CSeries::lambda_power(5, 2);
	CHECK(lambda_metric(a, CSeries(5)) == rat(1, 4));
	CHECK(lambda_metric(a, a) == 0);
	CSeries b = CSeries::lambda_power(5, 3);
	CHECK(lambda_metric(a, b) == rat(1, 4));
	CHECK(lambda_metric(a, b) <= std::max(lambda_metric(a, CSeries(5)),
	                                      lambda_metric(CSeries(5), b)));
}

TEST_CASE("matrix inverse and rank")
{
	Mat m(2, 2);
	m(0, 0) = CScalar(1);
	m(0, 1) = CScalar::I();
	m(1, 1) = CScalar(2);
	Mat inv = mat_inverse(m);
	CHECK(m * inv == Mat::identity(2));
	CHECK(mat_rank(m) == 2);
	Mat sing(2, 2);
	sing(0, 0) = CScalar(1);
	sing(1, 0) = CScalar(2);
	CHECK(mat_rank(sing) == 1);
	CHECK_THROWS_AS(mat_inverse(sing), SingularMatrix);
	auto ker = mat_kernel(sing);
	REQUIRE(ker.size() == 1);
	// m v = 0 for the kernel vector
	CHECK((sing(0, 0) * ker[0][0] + sing(0, 1) * ker[0][1]).is_zero());
}

TEST_CASE("exact PSD decision")
{
	CHECK(mat_is_psd(Mat::identity(3)));
	Mat m(2, 2);
	m(0, 0) = CScalar(2);
	m(0, 1) = CScalar::I();
	m(1, 0) = -CScalar::I();
	m(1, 1) = CScalar(2);
	CHECK(mat_is_psd(m)); // eigenvalues 1 and 3
	m(0, 1) = CScalar(rat(0), rat(3));
	m(1, 0) = CScalar(rat(0), rat(-3));
	CHECK(!mat_is_psd(m)); // eigenvalues -1 and 5
	Mat z(2, 2);
	z(0, 1) = CScalar(1);
	z(1, 0) = CScalar(1);
	CHECK(!mat_is_psd(z)); // zero diagonal, nonzero off-diagonal
	CHECK(mat_is_psd(Mat(2, 2)));
}
