#include "core/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace robsel {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a < 0 ? -a : a;
}

}  // namespace

Instance gen_random(int n, int p, std::optional<int> k, UncertaintyKind kind,
                    int num_scenarios, Cost cost_bound, std::uint64_t seed) {
  if (n < 2 || p < 1 || p > n - 1)
    throw std::invalid_argument("gen_random: need 2 <= n and 1 <= p <= n-1");
  if (k && (*k < 0 || *k > p))
    throw std::invalid_argument("gen_random: k out of range");
  if (cost_bound < 0) throw std::invalid_argument("gen_random: negative bound");
  if (kind == UncertaintyKind::discrete && num_scenarios < 1)
    throw std::invalid_argument("gen_random: need at least one scenario");

  Rng rng(seed);
  auto draw = [&] { return static_cast<Cost>(rng.range(0, cost_bound)); };

  Instance inst;
  inst.p = p;
  inst.k = k;
  inst.first_stage.resize(static_cast<size_t>(n));
  for (auto& c : inst.first_stage) c = draw();
  if (kind == UncertaintyKind::interval) {
    IntervalCosts iv;
    iv.lower.resize(static_cast<size_t>(n));
    iv.upper.resize(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) {
      Cost a = draw(), b = draw();
      iv.lower[static_cast<size_t>(e)] = std::min(a, b);
      iv.upper[static_cast<size_t>(e)] = std::max(a, b);
    }
    inst.uncertainty = std::move(iv);
  } else {
    DiscreteScenarios ds;
    ds.scenarios.assign(static_cast<size_t>(num_scenarios),
                        std::vector<Cost>(static_cast<size_t>(n)));
    for (auto& row : ds.scenarios)
      for (auto& c : row) c = draw();
    inst.uncertainty = std::move(ds);
  }
  inst.meta = {{"generator", "random"},
               {"seed", seed},
               {"cost_bound", cost_bound}};
  return inst;
}

Instance gen_rec_partition(const std::vector<std::int64_t>& a, int k) {
  const auto size = static_cast<std::int64_t>(a.size());
  if (size < 2 || size % 2 != 0)
    throw std::invalid_argument("gen_rec_partition: |a| must be even and >= 2");
  if (k < 1) throw std::invalid_argument("gen_rec_partition: k must be >= 1");
  std::int64_t sum = 0;
  for (auto v : a) {
    if (v < 1)
      throw std::invalid_argument("gen_rec_partition: entries must be positive");
    sum += v;
  }
  if (sum % 2 != 0)
    throw std::invalid_argument("gen_rec_partition: sum of a must be even");

  const std::int64_t half = size / 2;        // the reduction's n
  const std::int64_t b = sum / 2;
  const std::int64_t m1 = 4 * half * b;
  const std::int64_t m2 = 2 * half * m1;
  // 2b/half must come out integral; scale every cost by half/gcd if not.
  const std::int64_t scale = half / gcd64(2 * b, half);

  Instance inst;
  const int total = static_cast<int>(size) + 2 * k;
  inst.p = static_cast<int>(half) + k;
  inst.k = k;
  inst.first_stage.assign(static_cast<size_t>(total), 0);
  DiscreteScenarios ds;
  ds.scenarios.assign(2, std::vector<Cost>(static_cast<size_t>(total), 0));

  for (std::int64_t i = 0; i < size; ++i) {
    inst.first_stage[static_cast<size_t>(i)] = scale * m1;
    ds.scenarios[0][static_cast<size_t>(i)] = scale * (b + a[static_cast<size_t>(i)]);
    ds.scenarios[1][static_cast<size_t>(i)] =
        scale * b + (scale * 2 * b) / half - scale * a[static_cast<size_t>(i)];
  }
  for (int j = 0; j < k; ++j) {
    const auto f = static_cast<size_t>(size + j);   // free first stage
    const auto r = static_cast<size_t>(size + k + j);  // recovery item
    inst.first_stage[f] = 0;
    ds.scenarios[0][f] = scale * m2;
    ds.scenarios[1][f] = scale * m2;
    inst.first_stage[r] = scale * m2;
    ds.scenarios[0][r] = 0;
    ds.scenarios[1][r] = 0;
  }
  for (const auto& row : ds.scenarios)
    for (Cost c : row)
      if (c < 0)
        throw std::invalid_argument(
            "gen_rec_partition: an entry exceeds b + 2b/n, the reduction "
            "would need a negative cost");
  inst.uncertainty = std::move(ds);
  inst.meta = {{"generator", "rec_partition"},
               {"half", half},
               {"b", b},
               {"m1", m1},
               {"m2", m2},
               {"scale", scale},
               {"threshold", scale * (half * m1 + (half + 1) * b)}};
  return inst;
}

Instance gen_ts_partition(const std::vector<std::int64_t>& a) {
  const auto size = static_cast<std::int64_t>(a.size());
  if (size < 2 || size % 2 != 0)
    throw std::invalid_argument("gen_ts_partition: |a| must be even and >= 2");
  std::int64_t sum = 0;
  for (auto v : a) {
    if (v < 1)
      throw std::invalid_argument("gen_ts_partition: entries must be positive");
    sum += v;
  }

  // b = sum/2 and 6b/n = 3*sum/n both have to be integral after scaling.
  const std::int64_t d1 = 2 / gcd64(sum, 2);
  const std::int64_t d2 = size / gcd64(3 * sum, size);
  const std::int64_t scale = d1 * d2 / gcd64(d1, d2);
  const std::int64_t sb = scale * sum / 2;        // scale * b
  const std::int64_t s6bn = scale * 3 * sum / size;  // scale * 6b/n
  const std::int64_t sm = scale * 2 * size * sum;    // scale * M, M = 4nb

  Instance inst;
  const int total = static_cast<int>(size + size / 2);
  inst.p = static_cast<int>(size);
  inst.first_stage.assign(static_cast<size_t>(total), 0);
  DiscreteScenarios ds;
  ds.scenarios.assign(3, std::vector<Cost>(static_cast<size_t>(total), 0));

  for (std::int64_t i = 0; i < size; ++i) {
    const auto ai = a[static_cast<size_t>(i)];
    inst.first_stage[static_cast<size_t>(i)] = 3 * sb + scale * ai;
    ds.scenarios[0][static_cast<size_t>(i)] = 2 * scale * ai;
    ds.scenarios[1][static_cast<size_t>(i)] = s6bn - scale * ai;
    ds.scenarios[2][static_cast<size_t>(i)] = sm;
  }
  for (std::int64_t j = 0; j < size / 2; ++j) {
    const auto f = static_cast<size_t>(size + j);
    inst.first_stage[f] = sm;
    ds.scenarios[0][f] = sm;
    ds.scenarios[1][f] = sm;
    ds.scenarios[2][f] = 0;
  }
  for (const auto& row : ds.scenarios)
    for (Cost c : row)
      if (c < 0)
        throw std::invalid_argument(
            "gen_ts_partition: an entry exceeds 6b/n, the reduction would "
            "need a negative cost");
  inst.uncertainty = std::move(ds);
  inst.meta = {{"generator", "ts_partition"},
               {"scale", scale},
               {"scaled_b", sb},
               {"scaled_m", sm},
               {"threshold", (3 * (size / 2) + 3) * sb}};
  return inst;
}

Instance gen_three_sat(const std::vector<std::array<int, 3>>& clauses,
                       int num_vars) {
  if (clauses.empty())
    throw std::invalid_argument("gen_three_sat: need at least one clause");
  if (num_vars < 1)
    throw std::invalid_argument("gen_three_sat: need at least one variable");
  for (const auto& clause : clauses)
    for (int lit : clause)
      if (lit == 0 || lit < -num_vars || lit > num_vars)
        throw std::invalid_argument("gen_three_sat: literal out of range");

  const int m = static_cast<int>(clauses.size());
  const int total = 3 * m + 1;  // the recovery item sits last
  Instance inst;
  inst.p = m;
  inst.k = 1;
  inst.first_stage.assign(static_cast<size_t>(total), 0);
  inst.first_stage[static_cast<size_t>(3 * m)] = num_vars;

  auto item_of = [](int clause, int pos) { return 3 * clause + pos; };
  DiscreteScenarios ds;
  // Contradictory occurrence pairs, lexicographic by (clause, position).
  for (int s = 0; s < m; ++s) {
    for (int u = 0; u < 3; ++u) {
      for (int t = s; t < m; ++t) {
        for (int w = (t == s ? u + 1 : 0); w < 3; ++w) {
          if (clauses[static_cast<size_t>(s)][static_cast<size_t>(u)] !=
              -clauses[static_cast<size_t>(t)][static_cast<size_t>(w)])
            continue;
          std::vector<Cost> row(static_cast<size_t>(total), 0);
          row[static_cast<size_t>(item_of(s, u))] = 1;
          row[static_cast<size_t>(item_of(t, w))] = 1;
          ds.scenarios.push_back(std::move(row));
        }
      }
    }
  }
  for (int s = 0; s < m; ++s) {
    std::vector<Cost> row(static_cast<size_t>(total), 0);
    for (int u = 0; u < 3; ++u) row[static_cast<size_t>(item_of(s, u))] = 1;
    ds.scenarios.push_back(std::move(row));
  }
  inst.uncertainty = std::move(ds);
  inst.meta = {{"generator", "three_sat"},
               {"num_vars", num_vars},
               {"num_clauses", m}};
  return inst;
}

Instance gen_set_cover(int universe_size,
                       const std::vector<std::vector<int>>& sets) {
  if (universe_size < 1)
    throw std::invalid_argument("gen_set_cover: empty universe");
  if (sets.empty()) throw std::invalid_argument("gen_set_cover: empty family");
  std::vector<char> covered(static_cast<size_t>(universe_size) + 1, 0);
  for (const auto& s : sets)
    for (int el : s) {
      if (el < 1 || el > universe_size)
        throw std::invalid_argument("gen_set_cover: element out of range");
      covered[static_cast<size_t>(el)] = 1;
    }
  for (int el = 1; el <= universe_size; ++el)
    if (!covered[static_cast<size_t>(el)])
      throw std::invalid_argument("gen_set_cover: family does not cover " +
                                  std::to_string(el));

  const int m = static_cast<int>(sets.size());
  const Cost big = static_cast<Cost>(universe_size) * m;
  const int total = 2 * m;  // m set items then m fillers
  Instance inst;
  inst.p = m + 1;
  inst.first_stage.assign(static_cast<size_t>(total), big);
  for (int i = 0; i < m; ++i) inst.first_stage[static_cast<size_t>(i)] = 1;

  DiscreteScenarios ds;
  for (int el = 1; el <= universe_size; ++el) {
    std::vector<Cost> row(static_cast<size_t>(total), 0);
    int hits = 0;
    for (int i = 0; i < m; ++i) {
      const auto& s = sets[static_cast<size_t>(i)];
      if (std::find(s.begin(), s.end(), el) != s.end()) {
        row[static_cast<size_t>(i)] = big;
        ++hits;
      }
    }
    for (int j = hits; j < m; ++j) row[static_cast<size_t>(m + j)] = big;
    ds.scenarios.push_back(std::move(row));
  }
  inst.uncertainty = std::move(ds);
  inst.meta = {{"generator", "set_cover"},
               {"universe_size", universe_size},
               {"num_sets", m},
               {"big_m", big}};
  return inst;
}

}  // namespace robsel
