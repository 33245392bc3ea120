#include "mapcomb/oracle.hpp"

#include <algorithm>
#include <map>

namespace mapcomb {

namespace {

constexpr long long kEnumerationCap = 8;

void check_enumerable(long long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kEnumerationCap)
    throw RefusalError("mapping enumeration is O(n^n) and is capped at n = 8");
}

// Exact probability of one particular mapping whose sorted in-degree vector
// is `degrees`: (prod_i d_i!) / n! times the conditioned joint degree pmf.
// Depends on the degree multiset only, so callers memoize per class.
BigRational class_mapping_prob(const DegreeModel& model, const std::vector<std::int32_t>& degrees) {
  const auto n = static_cast<long long>(degrees.size());
  BigRational perm(1, factorial(n));
  for (std::int32_t d : degrees) perm *= BigRational(factorial(d));
  DegreeSequence seq;
  seq.d = degrees;
  return perm * model.conditioned_joint_pmf_exact(seq);
}

// Walks all mappings with f(1) = first, invoking fn(images) for each.
// images is one-based and reused between calls.
template <typename Fn>
void walk_shard(long long n, std::int32_t first, Fn&& fn) {
  std::vector<std::int32_t> images(static_cast<size_t>(n), 1);
  images[0] = first;
  for (;;) {
    fn(images);
    size_t i = images.size() - 1;
    while (i > 0 && images[i] == n) images[i--] = 1;
    if (i == 0) break;
    ++images[i];
  }
}

long long extract_stat(const GraphSummary& g, OracleStat stat) {
  switch (stat) {
    case OracleStat::CyclicCount:
      return g.cyclic_count;
    case OracleStat::ComponentCount:
      return g.component_count();
    case OracleStat::Connectedness:
      return g.component_count() == 1 ? 1 : 0;
    case OracleStat::FirstComponentSize:
      return g.component_sizes.front();
  }
  throw std::logic_error("extract_stat: unknown statistic");
}

using ScalarTally = std::map<std::pair<std::vector<std::int32_t>, long long>, long long>;

ScalarTally tally_shard_scalar(long long n, std::int32_t first, OracleStat stat) {
  ScalarTally tally;
  walk_shard(n, first, [&](const std::vector<std::int32_t>& images) {
    Mapping f(images);
    GraphSummary g = analyze(f);
    std::vector<std::int32_t> degrees = in_degrees(f).d;
    std::sort(degrees.begin(), degrees.end());
    ++tally[{std::move(degrees), extract_stat(g, stat)}];
  });
  return tally;
}

}  // namespace

BigRational ExactLaw::prob_of(long long v) const {
  auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it == values.end() || *it != v) return BigRational(0);
  return probs[static_cast<size_t>(it - values.begin())];
}

BigRational ExactLaw::total() const {
  BigRational s = 0;
  for (const auto& p : probs) s += p;
  return s;
}

void ExactLaw::write_csv(std::ostream& os) const {
  os << "value,numerator,denominator\n";
  for (size_t i = 0; i < values.size(); ++i)
    os << values[i] << ',' << numerator(probs[i]) << ',' << denominator(probs[i]) << '\n';
}

void enumerate_all_mappings(long long n, const std::function<void(const Mapping&)>& fn) {
  check_enumerable(n);
  for (std::int32_t first = 1; first <= n; ++first)
    walk_shard(n, first, [&](const std::vector<std::int32_t>& images) { fn(Mapping(images)); });
}

void enumerate_all(const DegreeModel& model, long long n,
                   const std::function<void(const Mapping&, const BigRational&)>& fn) {
  check_enumerable(n);
  if (!model.feasible(n))
    throw std::domain_error("conditioning event {sum of degrees = n} has probability zero");
  std::map<std::vector<std::int32_t>, BigRational> class_prob;
  enumerate_all_mappings(n, [&](const Mapping& f) {
    std::vector<std::int32_t> degrees = in_degrees(f).d;
    std::sort(degrees.begin(), degrees.end());
    auto it = class_prob.find(degrees);
    if (it == class_prob.end()) {
      BigRational prob = class_mapping_prob(model, degrees);
      it = class_prob.emplace(std::move(degrees), std::move(prob)).first;
    }
    fn(f, it->second);
  });
}

ExactLaw oracle_law(const DegreeModel& model, long long n, OracleStat stat, bool parallel) {
  check_enumerable(n);
  if (!model.feasible(n))
    throw std::domain_error("conditioning event {sum of degrees = n} has probability zero");

  std::vector<ScalarTally> shard(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long s = 0; s < n; ++s)
    shard[static_cast<size_t>(s)] = tally_shard_scalar(n, static_cast<std::int32_t>(s + 1), stat);

  ScalarTally merged;
  for (const auto& t : shard)
    for (const auto& [key, count] : t) merged[key] += count;

  std::map<std::vector<std::int32_t>, BigRational> class_prob;
  std::map<long long, BigRational> law;
  for (const auto& [key, count] : merged) {
    auto it = class_prob.find(key.first);
    if (it == class_prob.end())
      it = class_prob.emplace(key.first, class_mapping_prob(model, key.first)).first;
    if (it->second == 0) continue;  // degree class outside the model's support
    law[key.second] += count * it->second;
  }

  ExactLaw out;
  for (auto& [value, prob] : law) {
    out.values.push_back(value);
    out.probs.push_back(std::move(prob));
  }
  return out;
}

std::vector<std::pair<std::vector<long long>, BigRational>> oracle_joint_sizes(
    const DegreeModel& model, long long n, long long k, bool parallel) {
  check_enumerable(n);
  if (k < 1 || k > n) throw std::domain_error("oracle_joint_sizes: k out of range");
  if (!model.feasible(n))
    throw std::domain_error("conditioning event {sum of degrees = n} has probability zero");

  using JointTally = std::map<std::pair<std::vector<std::int32_t>, std::vector<long long>>, long long>;
  std::vector<JointTally> shard(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long s = 0; s < n; ++s) {
    JointTally tally;
    walk_shard(n, static_cast<std::int32_t>(s + 1), [&](const std::vector<std::int32_t>& images) {
      Mapping f(images);
      GraphSummary g = analyze(f);
      if (static_cast<long long>(g.component_sizes.size()) < k) return;
      std::vector<long long> sizes(g.component_sizes.begin(), g.component_sizes.begin() + k);
      std::vector<std::int32_t> degrees = in_degrees(f).d;
      std::sort(degrees.begin(), degrees.end());
      ++tally[{std::move(degrees), std::move(sizes)}];
    });
    shard[static_cast<size_t>(s)] = std::move(tally);
  }

  JointTally merged;
  for (const auto& t : shard)
    for (const auto& [key, count] : t) merged[key] += count;

  std::map<std::vector<std::int32_t>, BigRational> class_prob;
  std::map<std::vector<long long>, BigRational> law;
  for (const auto& [key, count] : merged) {
    auto it = class_prob.find(key.first);
    if (it == class_prob.end())
      it = class_prob.emplace(key.first, class_mapping_prob(model, key.first)).first;
    if (it->second == 0) continue;  // degree class outside the model's support
    law[key.second] += count * it->second;
  }

  std::vector<std::pair<std::vector<long long>, BigRational>> out;
  out.reserve(law.size());
  for (auto& [sizes, prob] : law) out.emplace_back(sizes, std::move(prob));
  return out;
}

}  // namespace mapcomb
