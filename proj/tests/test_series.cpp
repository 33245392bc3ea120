#include "doctest.h"
#include "mapcomb/series.hpp"

using namespace mapcomb;

TEST_CASE("series_mul truncated products, double and rational") {
  const std::vector<double> a = {1.0, 1.0};
  const auto sq = series_mul(a, a, 2);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == 1.0);
  CHECK(sq[1] == 2.0);
  CHECK(sq[2] == 1.0);

  const auto truncated = series_mul(a, a, 1);
  REQUIRE(truncated.size() == 2);
  CHECK(truncated[1] == 2.0);

  const std::vector<BigRational> r = {BigRational(1, 2), BigRational(1, 3)};
  const auto rr = series_mul(r, r, 2);
  CHECK(rr[0] == BigRational(1, 4));
  CHECK(rr[1] == BigRational(1, 3));
  CHECK(rr[2] == BigRational(1, 9));
}

TEST_CASE("series_pow matches binomial expansion") {
  const std::vector<double> base = {1.0, 1.0};
  const auto p4 = series_pow(base, 4, 4);
  const double expected[] = {1, 4, 6, 4, 1};
  REQUIRE(p4.size() == 5);
  for (size_t i = 0; i < 5; ++i) CHECK(p4[i] == doctest::Approx(expected[i]));

  const auto p0 = series_pow(base, 0, 3);
  CHECK(p0.size() == 1);
  CHECK(p0[0] == 1.0);

  const std::vector<BigRational> rbase = {BigRational(1), BigRational(1, 2)};
  const auto rp = series_pow(rbase, 3, 3);
  CHECK(rp[3] == BigRational(1, 8));
  CHECK(rp[1] == BigRational(3, 2));
}

TEST_CASE("parallel and serial convolutions agree bitwise") {
  std::vector<double> a(400), b(400);
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] = 1.0 / static_cast<double>(i + 1);
    b[i] = 1.0 / static_cast<double>(2 * i + 3);
  }
  const auto par = series_mul(a, b, 399, true);
  const auto ser = series_mul(a, b, 399, false);
  REQUIRE(par.size() == ser.size());
  for (size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("series_trim keeps at least one coefficient") {
  std::vector<double> z = {0.0, 0.0, 0.0};
  series_trim(z);
  CHECK(z.size() == 1);

  std::vector<double> t = {1.0, 2.0, 0.0, 0.0};
  series_trim(t);
  CHECK(t.size() == 2);
}
