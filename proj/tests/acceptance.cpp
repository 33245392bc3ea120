// Acceptance gate. Each numbered check prints exactly one PASS or FAIL line
// with the measured quantity next to its bound; the process exits nonzero if
// any check fails. All Monte Carlo draws run through the fixed shard layout,
// so reruns reproduce these numbers bit for bit regardless of thread count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mapcomb/asymptotics.hpp"
#include "mapcomb/bijection.hpp"
#include "mapcomb/degree_models.hpp"
#include "mapcomb/exact_stats.hpp"
#include "mapcomb/functional_graph.hpp"
#include "mapcomb/numeric.hpp"
#include "mapcomb/oracle.hpp"
#include "mapcomb/parallel.hpp"
#include "mapcomb/pmf.hpp"
#include "mapcomb/rng.hpp"
#include "mapcomb/samplers.hpp"
#include "test_util.hpp"

using namespace mapcomb;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int idx, bool pass, const std::string& detail) {
  std::printf("criterion %2d %s  %s\n", idx, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  return pass;
}

// ---------------------------------------------------------------------------
// 1. Every exact calculator equals the enumeration oracle on the full grid
//    (six models, n = 2..5), with zero tolerance, in under two minutes.

bool criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  long long cells = 0;
  bool ok = true;

  for (const auto& [name, model] : testutil::grid_models()) {
    for (long long n = 2; n <= 5 && ok; ++n) {
      const ExactLaw xo = oracle_law(model, n, OracleStat::CyclicCount);
      const RationalPmf xe = cyclic_pmf_exact(model, n);
      const RationalPmf xs = cyclic_pmf_series_exact(model, n);
      for (long long k = 1; k <= n; ++k) {
        ok = ok && xe.at(k) == xo.prob_of(k) && xs.at(k) == xo.prob_of(k);
        cells += 2;
      }
      if (model.family() == Family::GenNegBinomial) {
        const RationalPmf xc = cyclic_pmf_pref_exact(n, model.rho());
        for (long long k = 1; k <= n; ++k, ++cells) ok = ok && xc.at(k) == xo.prob_of(k);
      }
      if (model.family() == Family::BinomialM) {
        const RationalPmf xc = cyclic_pmf_antipref_exact(n, model.m());
        for (long long k = 1; k <= n; ++k, ++cells) ok = ok && xc.at(k) == xo.prob_of(k);
      }

      const ExactLaw no = oracle_law(model, n, OracleStat::ComponentCount);
      const RationalPmf ne = component_count_pmf_exact(xe);
      for (long long l = 1; l <= n; ++l, ++cells) ok = ok && ne.at(l) == no.prob_of(l);

      const ExactLaw co = oracle_law(model, n, OracleStat::Connectedness);
      ok = ok && connectedness_prob_exact(xe) == co.prob_of(1);
      ++cells;

      const ExactLaw so = oracle_law(model, n, OracleStat::FirstComponentSize);
      const RationalPmf se = component_size_pmf_exact(model, n);
      for (long long l = 1; l <= n; ++l, ++cells) ok = ok && se.at(l) == so.prob_of(l);

      for (long long k = 1; k <= n; ++k)
        for (const auto& [sizes, prob] : oracle_joint_sizes(model, n, k)) {
          ok = ok && joint_component_sizes_pmf_exact(model, n, sizes) == prob;
          ++cells;
        }
    }
  }

  const double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "oracle grid, 6 models x n=2..5: %lld exact cells equal, %.1f s (< 120 s)",
                cells, dt);
  return report(1, ok && dt < 120.0, buf);
}

// ---------------------------------------------------------------------------
// 2. Hand-enumerated anchor values, matched exactly.

bool criterion2() {
  bool ok = true;
  ok = ok && cyclic_pmf_exact(DegreeModel::gen_neg_binomial(BigRational(1)), 2).at(1) ==
                 BigRational(2, 3);
  ok = ok && cyclic_pmf_exact(DegreeModel::binomial_m(2), 2).at(2) == BigRational(2, 3);
  ok = ok && connectedness_prob_exact(cyclic_pmf_exact(DegreeModel::poisson1(), 2)) ==
                 BigRational(3, 4);
  const RationalPmf u3 = cyclic_pmf_exact(DegreeModel::poisson1(), 3);
  ok = ok && u3.at(1) == BigRational(1, 3) && u3.at(2) == BigRational(4, 9) &&
       u3.at(3) == BigRational(2, 9);
  return report(2, ok, "hand values 2/3, 2/3, 3/4 and (1/3, 4/9, 2/9) match exactly");
}

// ---------------------------------------------------------------------------
// 3. Urn processes against the closed-form mapping probabilities: chi-square
//    over all 27 mappings at n = 3 with 1e7 draws each, and the closed forms
//    against the degree-conditioned route for every mapping with n <= 4.

long long cell27(const Mapping& f) {
  return static_cast<long long>(f(0)) * 9 + static_cast<long long>(f(1)) * 3 +
         static_cast<long long>(f(2));
}

bool criterion3() {
  const long long draws = 10000000;

  std::vector<double> pref_probs(27), anti_probs(27);
  enumerate_all_mappings(3, [&](const Mapping& f) {
    pref_probs[static_cast<size_t>(cell27(f))] = mapping_probability_pref(3, 2.0, f);
    anti_probs[static_cast<size_t>(cell27(f))] = mapping_probability_antipref(3, 2, f);
  });

  auto histogram = [&](std::uint64_t seed, bool pref) {
    auto shards = run_sharded<std::vector<long long>>(
        seed, draws,
        [&](Rng& rng, long long cnt, std::vector<long long>& h) {
          h.assign(27, 0);
          for (long long i = 0; i < cnt; ++i) {
            const Mapping f = pref ? sample_preferential(3, 2.0, rng)
                                   : sample_antipreferential(3, 2, rng);
            ++h[static_cast<size_t>(cell27(f))];
          }
        },
        true);
    return fold_histograms(shards);
  };

  const double p_pref = testutil::chi_square_pvalue(histogram(301, true), pref_probs, draws);
  const double p_anti = testutil::chi_square_pvalue(histogram(302, false), anti_probs, draws);

  double worst = 0.0;
  for (long long n = 1; n <= 4; ++n) {
    std::vector<DegreeModel> prefs, antis;
    for (const auto& rho : {BigRational(1, 2), BigRational(1), BigRational(2)})
      prefs.push_back(DegreeModel::gen_neg_binomial(rho));
    for (long long m = 1; m <= 3; ++m) antis.push_back(DegreeModel::binomial_m(m));
    enumerate_all_mappings(n, [&](const Mapping& f) {
      for (const auto& model : prefs)
        worst = std::max(worst, std::abs(mapping_probability_pref(n, to_double(model.rho()), f) -
                                         mapping_probability(model, f)));
      for (const auto& model : antis)
        worst = std::max(worst, std::abs(mapping_probability_antipref(n, model.m(), f) -
                                         mapping_probability(model, f)));
    });
  }

  const bool ok = p_pref > 0.001 && p_anti > 0.001 && worst <= 1e-12;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "urn vs closed form at n=3, 1e7 draws: p=%.3g (pref), p=%.3g (anti) > 0.001; "
                "closed vs conditioned route, n<=4: max |diff| %.2e <= 1e-12",
                p_pref, p_anti, worst);
  return report(3, ok, buf);
}

// ---------------------------------------------------------------------------
// 4. Degenerate families: m = 1 emits permutations with every vertex cyclic,
//    and the Poisson family weighs every mapping at exactly n^-n.

bool criterion4() {
  bool perms = true;
  Rng rng(407);
  const DegreeModel m1 = DegreeModel::binomial_m(1);
  for (long long n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 2000; ++rep) {
      const Mapping f = rep % 2 == 0 ? sample_antipreferential(n, 1, rng)
                                     : sample_conditioned_mapping(m1, n, rng);
      const GraphSummary g = analyze(f);
      perms = perms && g.cyclic_count == n;
      const DegreeSequence d = in_degrees(f);
      for (auto deg : d.d) perms = perms && deg == 1;
    }
  }

  bool uniform = true;
  const DegreeModel poisson = DegreeModel::poisson1();
  for (long long n = 1; n <= 5; ++n) {
    BigInt nn(1);
    for (long long i = 0; i < n; ++i) nn *= n;
    const BigRational want(BigInt(1), nn);
    enumerate_all_mappings(n, [&](const Mapping& f) {
      uniform = uniform && mapping_probability_exact(poisson, f) == want;
    });
  }

  return report(4, perms && uniform,
                "m=1 draws are all permutations (X = n); Poisson weights equal n^-n for "
                "every mapping, n <= 5");
}

// ---------------------------------------------------------------------------
// 5. In-degree-0 rate of the binomial m = 2 family: the exact marginal equals
//    (n-1)/(2(2n-1)) for n = 2..100, and the expected count at n = 1e4 sits
//    within 1% of n/4.

bool criterion5() {
  const DegreeModel model = DegreeModel::binomial_m(2);
  bool exact = true;
  for (long long n = 2; n <= 100; ++n)
    exact = exact && model.marginal_pmf_exact(n, 0) == BigRational(n - 1, 2 * (2 * n - 1));

  const long long n = 10000;
  const double expected = to_double(model.marginal_pmf_exact(n, 0)) * static_cast<double>(n);
  const double rel = std::abs(expected - n / 4.0) / (n / 4.0);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "Pr{deg 0} = (n-1)/(2(2n-1)) exactly for n=2..100; E[count] at n=1e4 is "
                "%.2f vs n/4, rel err %.2e < 1%%",
                expected, rel);
  return report(5, exact && rel < 0.01, buf);
}

// ---------------------------------------------------------------------------
// 6. Local limit: sqrt(n) Pr{X=k} against the Rayleigh density at n = 40000
//    for rho = 1 and m = 2, sup over k <= 3 sqrt(n) below 0.05, under a minute.

bool criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  const long long n = 40000;
  const double root_n = std::sqrt(static_cast<double>(n));
  double sup = 0.0;

  for (const DegreeModel& model :
       {DegreeModel::gen_neg_binomial(BigRational(1)), DegreeModel::binomial_m(2)}) {
    const Pmf pmf = cyclic_pmf(model, n);
    const double sigma2 = cyclic_limit_sigma2(model);
    const auto kmax = static_cast<long long>(3.0 * root_n);
    for (long long k = 1; k <= kmax; ++k) {
      const double diff = std::abs(root_n * pmf.at(k) -
                                   cyclic_limit_density(sigma2, static_cast<double>(k) / root_n));
      sup = std::max(sup, diff);
    }
  }

  const double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "local limit at n=40000 (rho=1, m=2): sup |sqrt(n) p_k - f(k/sqrt(n))| = "
                "%.4f < 0.05, %.1f s (< 60 s)",
                sup, dt);
  return report(6, sup < 0.05 && dt < 60.0, buf);
}

// ---------------------------------------------------------------------------
// 7. Component-fraction limit: n Pr{C_1 = floor(x n)} within 5% of
//    1/(2 sqrt(1-x)) at n = 5000 for both urn families.

bool criterion7() {
  const long long n = 5000;
  bool ok = true;
  double worst = 0.0;
  for (const DegreeModel& model :
       {DegreeModel::gen_neg_binomial(BigRational(1)), DegreeModel::binomial_m(2)}) {
    const Pmf law = component_size_pmf(model, n);
    for (double x : {0.1, 0.5, 0.9}) {
      const auto ell = static_cast<long long>(x * static_cast<double>(n));
      const double got = static_cast<double>(n) * law.at(ell);
      const double want = 0.5 / std::sqrt(1.0 - x);
      const double rel = std::abs(got - want) / want;
      worst = std::max(worst, rel);
      ok = ok && rel < 0.05;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "n Pr{C1 = xn} vs 1/(2 sqrt(1-x)) at n=5000, x in {0.1, 0.5, 0.9}: worst "
                "rel err %.3f < 0.05",
                worst);
  return report(7, ok, buf);
}

// ---------------------------------------------------------------------------
// 8. Mean cyclic count from the exact pmf at n = 1e5 against the square-root
//    asymptotic, ratio within [0.98, 1.02], for rho in {1, 2} and m in {2, 3}.

bool criterion8() {
  const long long n = 100000;
  bool ok = true;
  double lo = 10.0, hi = 0.0;
  std::vector<DegreeModel> models;
  models.push_back(DegreeModel::gen_neg_binomial(BigRational(1)));
  models.push_back(DegreeModel::gen_neg_binomial(BigRational(2)));
  models.push_back(DegreeModel::binomial_m(2));
  models.push_back(DegreeModel::binomial_m(3));
  for (const auto& model : models) {
    const double ratio = cyclic_pmf(model, n).mean() / cyclic_mean_asymptotic(model, n);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    ok = ok && ratio >= 0.98 && ratio <= 1.02;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "E(X)/sqrt(pi sigma2 n/2) at n=1e5 over rho in {1,2}, m in {2,3}: ratios in "
                "[%.4f, %.4f], need [0.98, 1.02]",
                lo, hi);
  return report(8, ok, buf);
}

// ---------------------------------------------------------------------------
// 9. The Bernoulli-sum representation of the component count: empirical law
//    of 1e6 draws against the exact component-count pmf at n = 5, per model.

bool criterion9() {
  const long long draws = 1000000;
  const long long n = 5;
  bool ok = true;
  double worst_p = 1.0;
  std::uint64_t seed = 901;
  for (const auto& [name, model] : testutil::grid_models()) {
    const Pmf x = cyclic_pmf_exact(model, n).to_float();
    const RationalPmf counts = component_count_pmf_exact(cyclic_pmf_exact(model, n));
    std::vector<double> probs(static_cast<size_t>(n));
    for (long long l = 1; l <= n; ++l) probs[static_cast<size_t>(l - 1)] = to_double(counts.at(l));

    auto shards = run_sharded<std::vector<long long>>(
        seed++, draws,
        [&](Rng& rng, long long cnt, std::vector<long long>& h) {
          h.assign(static_cast<size_t>(n), 0);
          for (long long i = 0; i < cnt; ++i)
            ++h[static_cast<size_t>(sample_component_count_xi(x, rng) - 1)];
        },
        true);
    const double p = testutil::chi_square_pvalue(fold_histograms(shards), probs, draws);
    worst_p = std::min(worst_p, p);
    ok = ok && p > 0.001;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "Bernoulli-sum law vs exact component counts, n=5, 1e6 draws x 6 models: "
                "min p = %.3g > 0.001",
                worst_p);
  return report(9, ok, buf);
}

// ---------------------------------------------------------------------------
// 10. Largest component fraction at n = 20000 against the largest coordinate
//     of the Poisson-Dirichlet(1/2) law, two-sample KS below 0.03 per family.

bool criterion10() {
  const long long n = 20000;
  const long long runs = 10000;
  const long long ref_draws = 100000;
  bool ok = true;
  double worst = 0.0;

  auto ref_shards = run_sharded<std::vector<double>>(
      1001, ref_draws,
      [&](Rng& rng, long long cnt, std::vector<double>& acc) {
        for (long long i = 0; i < cnt; ++i)
          acc.push_back(sample_poisson_dirichlet_half(rng)[0]);
      },
      true);
  const std::vector<double> ref = fold_samples(ref_shards);

  std::uint64_t seed = 1002;
  for (const DegreeModel& model :
       {DegreeModel::gen_neg_binomial(BigRational(1)), DegreeModel::binomial_m(2)}) {
    const ComponentStructure structure(model, n);
    auto shards = run_sharded<std::vector<double>>(
        seed++, runs,
        [&](Rng& rng, long long cnt, std::vector<double>& acc) {
          for (long long i = 0; i < cnt; ++i) {
            long long mx = 0;
            for (long long s : structure.sample_sizes(rng)) mx = std::max(mx, s);
            acc.push_back(static_cast<double>(mx) / static_cast<double>(n));
          }
        },
        true);
    const double ks = ks_statistic_two_sample(fold_samples(shards), ref);
    worst = std::max(worst, ks);
    ok = ok && ks < 0.03;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "largest component / n at n=20000 (1e4 runs per family) vs GEM(1/2) largest "
                "(1e5 draws): worst KS = %.4f < 0.03",
                worst);
  return report(10, ok, buf);
}

// ---------------------------------------------------------------------------
// 11. Slow-growth check on the mean component count: exact E(N) at n = 2000
//     within an absolute offset of 2 from ln(n)/2. Only the leading term is
//     pinned asymptotically, so the band is deliberately loose.

bool criterion11() {
  const long long n = 2000;
  const double target = 0.5 * std::log(static_cast<double>(n));
  bool ok = true;
  double worst = 0.0;
  for (const DegreeModel& model :
       {DegreeModel::poisson1(), DegreeModel::gen_neg_binomial(BigRational(1)),
        DegreeModel::binomial_m(2)}) {
    const double mean = component_count_pmf(cyclic_pmf(model, n)).mean();
    worst = std::max(worst, std::abs(mean - target));
    ok = ok && std::abs(mean - target) <= 2.0;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "exact E(N) at n=2000 vs ln(n)/2 = %.3f: worst |offset| = %.3f <= 2",
                target, worst);
  return report(11, ok, buf);
}

}  // namespace

int main() {
  apply_thread_env();
  bool all = true;
  all = criterion1() && all;
  all = criterion2() && all;
  all = criterion3() && all;
  all = criterion4() && all;
  all = criterion5() && all;
  all = criterion6() && all;
  all = criterion7() && all;
  all = criterion8() && all;
  all = criterion9() && all;
  all = criterion10() && all;
  all = criterion11() && all;
  std::printf("%s\n", all ? "acceptance: all criteria PASS" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
