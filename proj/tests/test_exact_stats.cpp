#include <cmath>
#include <map>

#include "doctest.h"
#include "mapcomb/exact_stats.hpp"
#include "mapcomb/oracle.hpp"
#include "test_util.hpp"

using namespace mapcomb;
using testutil::chi_square_pvalue;
using testutil::grid_models;

namespace {

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("cyclic law hand anchors") {
  const auto uniform3 = cyclic_pmf_exact(DegreeModel::poisson1(), 3);
  CHECK(uniform3.at(1) == BigRational(1, 3));
  CHECK(uniform3.at(2) == BigRational(4, 9));
  CHECK(uniform3.at(3) == BigRational(2, 9));

  const auto gnb2 = cyclic_pmf_exact(DegreeModel::gen_neg_binomial(BigRational(1)), 2);
  CHECK(gnb2.at(1) == BigRational(2, 3));
  CHECK(gnb2.at(2) == BigRational(1, 3));

  const auto pref = cyclic_pmf_pref_exact(2, BigRational(1));
  CHECK(pref.at(1) == BigRational(2, 3));
  CHECK(pref.at(2) == BigRational(1, 3));

  const auto anti = cyclic_pmf_antipref_exact(2, 2);
  CHECK(anti.at(1) == BigRational(1, 3));
  CHECK(anti.at(2) == BigRational(2, 3));

  for (const auto& [name, model] : grid_models()) {
    CAPTURE(name);
    const auto one = cyclic_pmf_exact(model, 1);
    CHECK(one.at(1) == 1);
  }
}

TEST_CASE("m = 1 keeps every vertex cyclic") {
  for (long long n : {1LL, 4LL, 9LL}) {
    const auto law = cyclic_pmf_antipref_exact(n, 1);
    CHECK(law.at(n) == 1);
    CHECK(law.total() == 1);
  }
}

TEST_CASE("anti-preferential law normalizes exactly in rational mode") {
  CHECK(cyclic_pmf_antipref_exact(3, 2).total() == 1);
  CHECK(cyclic_pmf_antipref_exact(7, 3).total() == 1);
}

TEST_CASE("series route equals the family closed forms exactly at small n") {
  for (long long n = 1; n <= 12; ++n) {
    for (const auto& rho : {BigRational(1, 2), BigRational(1), BigRational(2)}) {
      const auto series = cyclic_pmf_series_exact(DegreeModel::gen_neg_binomial(rho), n);
      const auto closed = cyclic_pmf_pref_exact(n, rho);
      for (long long k = 1; k <= n; ++k) CHECK(series.at(k) == closed.at(k));
    }
    for (long long m : {2LL, 3LL}) {
      const auto series = cyclic_pmf_series_exact(DegreeModel::binomial_m(m), n);
      const auto closed = cyclic_pmf_antipref_exact(n, m);
      for (long long k = 1; k <= n; ++k) CHECK(series.at(k) == closed.at(k));
    }
  }
}

TEST_CASE("series route tracks the closed forms to 1e-9 up to n = 50") {
  for (long long n : {20LL, 35LL, 50LL}) {
    const auto pref_series = cyclic_pmf_series(DegreeModel::gen_neg_binomial(BigRational(1)), n);
    const auto pref_closed = cyclic_pmf_pref(n, 1.0);
    const auto anti_series = cyclic_pmf_series(DegreeModel::binomial_m(2), n);
    const auto anti_closed = cyclic_pmf_antipref(n, 2);
    const auto poisson_series = cyclic_pmf_series(DegreeModel::poisson1(), n);
    const auto poisson_closed = cyclic_pmf(DegreeModel::poisson1(), n);
    for (long long k = 1; k <= n; ++k) {
      CHECK(std::abs(pref_series.at(k) - pref_closed.at(k)) <= 1e-9 * pref_closed.at(k));
      CHECK(std::abs(anti_series.at(k) - anti_closed.at(k)) <= 1e-9 * anti_closed.at(k));
      CHECK(std::abs(poisson_series.at(k) - poisson_closed.at(k)) <= 1e-9 * poisson_closed.at(k));
    }
  }
}

TEST_CASE("float laws track the exact laws to 1e-12") {
  for (const auto& [name, model] : grid_models()) {
    CAPTURE(name);
    const auto exact = cyclic_pmf_exact(model, 24).to_float();
    const auto approx = cyclic_pmf(model, 24);
    for (long long k = 1; k <= 24; ++k) CHECK(close_rel(approx.at(k), exact.at(k), 1e-12));
  }
}

TEST_CASE("custom table reproduces the anti-preferential law exactly") {
  const auto table = DegreeModel::custom({BigRational(1, 4), BigRational(1, 2), BigRational(1, 4)});
  for (long long n = 1; n <= 10; ++n) {
    const auto via_table = cyclic_pmf_exact(table, n);
    const auto closed = cyclic_pmf_antipref_exact(n, 2);
    for (long long k = 1; k <= n; ++k) CHECK(via_table.at(k) == closed.at(k));
  }
}

TEST_CASE("laws stay normalized through the log-space path at n = 2000") {
  CHECK_NOTHROW(cyclic_pmf_pref(2000, 1.0).validate(1e-10));
  CHECK_NOTHROW(cyclic_pmf_antipref(2000, 2).validate(1e-10));
  CHECK_NOTHROW(cyclic_pmf(DegreeModel::poisson1(), 2000).validate(1e-10));
  CHECK_NOTHROW(component_size_pmf(DegreeModel::gen_neg_binomial(BigRational(2)), 2000).validate(1e-10));
  CHECK_NOTHROW(component_count_pmf(cyclic_pmf(DegreeModel::binomial_m(3), 2000)).validate(1e-10));
}

TEST_CASE("component-count law: permutation case is the Stirling row") {
  Pmf x{3, {1.0}};  // X identically 3
  const Pmf law = component_count_pmf(x);
  CHECK(law.at(1) == doctest::Approx(2.0 / 6.0).epsilon(1e-12));
  CHECK(law.at(2) == doctest::Approx(3.0 / 6.0).epsilon(1e-12));
  CHECK(law.at(3) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  const auto m1 = component_count_pmf_exact(cyclic_pmf_antipref_exact(3, 1));
  CHECK(m1.at(1) == BigRational(1, 3));
  CHECK(m1.at(2) == BigRational(1, 2));
  CHECK(m1.at(3) == BigRational(1, 6));
}

TEST_CASE("component-count law: uniform mapping at n = 2") {
  const auto law = component_count_pmf_exact(cyclic_pmf_exact(DegreeModel::poisson1(), 2));
  CHECK(law.at(1) == BigRational(3, 4));
  CHECK(law.at(2) == BigRational(1, 4));
}

TEST_CASE("expected component count agrees with the harmonic-number route") {
  const auto model = DegreeModel::gen_neg_binomial(BigRational(1, 2));
  const Pmf x = cyclic_pmf(model, 80);
  const double via_law = component_count_pmf(x).mean();
  double harmonic = 0.0, h = 0.0;
  StableSum acc;
  for (long long k = 1; k <= 80; ++k) {
    h += 1.0 / static_cast<double>(k);
    acc.add(x.at(k) * h);
  }
  harmonic = acc.value();
  CHECK(via_law == doctest::Approx(harmonic).epsilon(1e-12));
}

TEST_CASE("exact and streaming component-count paths meet at the cap") {
  const auto model = DegreeModel::gen_neg_binomial(BigRational(1));
  const auto exact = component_count_pmf_exact(cyclic_pmf_exact(model, 120)).to_float();
  const auto streamed = component_count_pmf(cyclic_pmf(model, 120));
  for (long long l = 1; l <= 120; ++l) CHECK(close_rel(streamed.at(l), exact.at(l), 1e-10));

  RationalPmf big;
  big.min_value = 1;
  big.p.assign(301, BigRational(0));
  big.p[300] = 1;
  CHECK_THROWS_AS(component_count_pmf_exact(big), RefusalError);
}

TEST_CASE("connectedness anchors") {
  CHECK(connectedness_prob_exact(cyclic_pmf_exact(DegreeModel::poisson1(), 2)) == BigRational(3, 4));
  CHECK(connectedness_prob_exact(cyclic_pmf_exact(DegreeModel::gen_neg_binomial(BigRational(1)), 2)) ==
        BigRational(5, 6));
  Pmf sure{1, {1.0}};
  CHECK(connectedness_prob(sure) == doctest::Approx(1.0));
  // Connectedness equals Pr{N = 1} by definition of the component count.
  const auto model = DegreeModel::binomial_m(3);
  const auto x = cyclic_pmf_exact(model, 9);
  CHECK(connectedness_prob_exact(x) == component_count_pmf_exact(x).at(1));
}

TEST_CASE("xi representation: degenerate and permutation cases") {
  Rng rng(2101);
  for (int i = 0; i < 20; ++i) CHECK(sample_component_count_xi(1, rng) == 1);

  std::vector<long long> counts(3);
  const long long draws = 200000;
  for (long long i = 0; i < draws; ++i) ++counts[sample_component_count_xi(3, rng) - 1];
  CHECK(chi_square_pvalue(counts, {2.0 / 6.0, 3.0 / 6.0, 1.0 / 6.0}, draws) > 0.001);
}

TEST_CASE("xi representation reproduces the component-count law at n = 5") {
  const long long draws = 200000;
  for (const auto& name : {std::string("poisson1"), std::string("binm(2)")}) {
    const DegreeModel model =
        name == "poisson1" ? DegreeModel::poisson1() : DegreeModel::binomial_m(2);
    CAPTURE(name);
    const Pmf x = cyclic_pmf(model, 5);
    const Pmf expected = component_count_pmf(x);
    std::vector<long long> counts(5);
    Rng rng(2102);
    for (long long i = 0; i < draws; ++i) ++counts[sample_component_count_xi(x, rng) - 1];
    std::vector<double> probs;
    for (long long l = 1; l <= 5; ++l) probs.push_back(expected.at(l));
    CHECK(chi_square_pvalue(counts, probs, draws) > 0.001);
  }
}

TEST_CASE("component-size law anchors") {
  const auto uniform2 = component_size_pmf_exact(DegreeModel::poisson1(), 2);
  CHECK(uniform2.at(1) == BigRational(1, 4));
  CHECK(uniform2.at(2) == BigRational(3, 4));

  const auto single = component_size_pmf_exact(DegreeModel::poisson1(), 1);
  CHECK(single.at(1) == 1);

  // Uniform permutations: the cycle through vertex 1 is uniform on {1..n}.
  const auto m1 = component_size_pmf_exact(DegreeModel::binomial_m(1), 4);
  for (long long l = 1; l <= 4; ++l) CHECK(m1.at(l) == BigRational(1, 4));

  const auto model = DegreeModel::gen_neg_binomial(BigRational(2));
  const Pmf sizes = component_size_pmf(model, 40);
  for (long long l = 1; l <= 40; ++l)
    CHECK(close_rel(sizes.at(l), component_size_at(model, 40, l), 1e-12));
}

TEST_CASE("joint size law: anchors, consistency, and validation") {
  const auto poisson = DegreeModel::poisson1();
  const std::vector<long long> three_loops = {1, 1, 1};
  CHECK(joint_component_sizes_pmf_exact(poisson, 3, three_loops) == BigRational(1, 27));
  const std::vector<long long> two_loops = {1, 1};
  CHECK(joint_component_sizes_pmf_exact(poisson, 2, two_loops) == BigRational(1, 4));

  for (const auto& [name, model] : grid_models()) {
    CAPTURE(name);
    const auto sizes = component_size_pmf_exact(model, 5);
    for (long long l = 1; l <= 5; ++l) {
      const std::vector<long long> one = {l};
      CHECK(joint_component_sizes_pmf_exact(model, 5, one) == sizes.at(l));
    }
  }

  const std::vector<long long> zero_len = {0, 2};
  CHECK_THROWS_AS(joint_component_sizes_pmf(poisson, 3, zero_len), std::domain_error);
  const std::vector<long long> too_long = {3, 3};
  CHECK_THROWS_AS(joint_component_sizes_pmf(poisson, 5, too_long), std::domain_error);
}

TEST_CASE("marginalizing the second component recovers the size law") {
  for (const auto& [name, model] : grid_models()) {
    CAPTURE(name);
    for (long long n = 2; n <= 5; ++n) {
      const auto sizes = component_size_pmf_exact(model, n);
      for (long long l1 = 1; l1 <= n; ++l1) {
        BigRational total = 0;
        if (l1 == n) {
          const std::vector<long long> whole = {n};
          total = joint_component_sizes_pmf_exact(model, n, whole);
        } else {
          for (long long l2 = 1; l1 + l2 <= n; ++l2) {
            const std::vector<long long> pair = {l1, l2};
            total += joint_component_sizes_pmf_exact(model, n, pair);
          }
        }
        CHECK(total == sizes.at(l1));
      }
    }
  }
}

TEST_CASE("infeasible conditioning surfaces as a domain error") {
  const auto even = DegreeModel::custom({BigRational(1, 2), BigRational(0), BigRational(1, 2)});
  CHECK_THROWS_AS(cyclic_pmf(even, 3), std::domain_error);
  CHECK_THROWS_AS(component_size_pmf(even, 3), std::domain_error);
  CHECK_NOTHROW(cyclic_pmf(even, 4).validate(1e-10));
}

TEST_CASE("exact series route refuses past its cap") {
  const auto model = DegreeModel::poisson1();
  CHECK_THROWS_AS(cyclic_pmf_series_exact(model, 65), RefusalError);
  CHECK_NOTHROW(cyclic_pmf_exact(model, 100).validate());  // closed form has no such cap
}

TEST_CASE("ComponentStructure matches the direct evaluators") {
  for (const auto& [name, model] : grid_models()) {
    CAPTURE(name);
    const ComponentStructure chain(model, 40);
    for (long long l : {1LL, 2LL, 7LL, 25LL, 40LL})
      CHECK(close_rel(chain.connectedness_at(l), connectedness_prob(cyclic_pmf(model, l)), 1e-12));

    const Pmf direct = component_size_pmf(model, 40);
    const Pmf first = chain.first_size_pmf(40);
    for (long long l = 1; l <= 40; ++l) CHECK(close_rel(first.at(l), direct.at(l), 1e-12));

    // The chain is exact: with r vertices remaining, the next component obeys
    // the first-component law of the same model at size r.
    for (long long r : {10LL, 25LL}) {
      const Pmf expected = component_size_pmf(model, r);
      const Pmf next = chain.first_size_pmf(r);
      for (long long l = 1; l <= r; ++l) CHECK(close_rel(next.at(l), expected.at(l), 1e-12));
    }
  }
}

TEST_CASE("ComponentStructure on a custom table matches its closed-form twin") {
  const auto table = DegreeModel::custom({BigRational(1, 4), BigRational(1, 2), BigRational(1, 4)});
  const ComponentStructure via_table(table, 30);
  const ComponentStructure closed(DegreeModel::binomial_m(2), 30);
  const Pmf a = via_table.first_size_pmf(30);
  const Pmf b = closed.first_size_pmf(30);
  for (long long l = 1; l <= 30; ++l) CHECK(close_rel(a.at(l), b.at(l), 1e-9));
}

TEST_CASE("chain sampler: sizes sum to n, first size and count laws check out") {
  const auto model = DegreeModel::gen_neg_binomial(BigRational(1));
  const long long n = 30;
  const ComponentStructure chain(model, n);
  const long long draws = 100000;
  std::vector<long long> first_counts(static_cast<size_t>(n));
  std::vector<long long> count_counts(static_cast<size_t>(n));
  Rng rng(2103);
  for (long long i = 0; i < draws; ++i) {
    const auto sizes = chain.sample_sizes(rng);
    long long total = 0;
    for (long long s : sizes) total += s;
    if (total != n) REQUIRE(total == n);
    ++first_counts[static_cast<size_t>(sizes.front() - 1)];
    ++count_counts[static_cast<size_t>(sizes.size() - 1)];
  }

  const Pmf first_law = component_size_pmf(model, n);
  std::vector<double> first_probs;
  for (long long l = 1; l <= n; ++l) first_probs.push_back(first_law.at(l));
  CHECK(chi_square_pvalue(first_counts, first_probs, draws) > 0.001);

  const Pmf count_law = component_count_pmf(cyclic_pmf(model, n));
  std::vector<double> count_probs;
  for (long long l = 1; l <= n; ++l) count_probs.push_back(count_law.at(l));
  CHECK(chi_square_pvalue(count_counts, count_probs, draws) > 0.001);
}
