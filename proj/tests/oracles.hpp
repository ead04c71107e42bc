#pragma once

// Brute-force reference computations, independent of the library algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "matchfield/matching_field.hpp"
#include "matchfield/rational.hpp"

namespace oracle {

using matchfield::IntVector;
using matchfield::Rational;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Minimizing tuple over all k! orderings; nullopt on a tie.
inline std::optional<std::vector<int>> min_permutation(const matchfield::WeightMatrix& m, std::vector<int> cols) {
  std::sort(cols.begin(), cols.end());
  std::optional<Rational> best;
  std::vector<int> arg;
  bool tie = false;
  do {
    Rational w = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) w += m(static_cast<int>(i) + 1, cols[i]);
    if (!best || w < *best) {
      best = w;
      arg = cols;
      tie = false;
    } else if (w == *best) {
      tie = true;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));
  if (tie) return std::nullopt;
  return arg;
}

inline Rational min_weight(const matchfield::WeightMatrix& m, std::vector<int> cols) {
  std::sort(cols.begin(), cols.end());
  std::optional<Rational> best;
  do {
    Rational w = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) w += m(static_cast<int>(i) + 1, cols[i]);
    if (!best || w < *best) best = w;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return *best;
}

/// Sign of a permutation of distinct integers via cycle decomposition.
inline int permutation_sign(const std::vector<int>& tuple) {
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> pos(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    pos[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), tuple[i]) - sorted.begin());
  std::vector<bool> seen(tuple.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = pos[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Determinant by Leibniz expansion.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  std::vector<int> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  Rational total = 0;
  do {
    Rational term = permutation_sign(perm);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Grid coordinates of Q_{k,n}, row-major.
inline std::vector<std::pair<int, int>> grid(int k, int n) {
  std::vector<std::pair<int, int>> g;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) g.emplace_back(i, j);
  return g;
}

/// Upward-closed 0/1 vectors by scanning all 2^d subsets.
inline std::set<IntVector> filters_by_scan(int k, int n) {
  const auto g = grid(k, n);
  const std::size_t d = g.size();
  std::set<IntVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < d && ok; ++a)
      for (std::size_t b = 0; b < d && ok; ++b)
        if ((mask >> a & 1) && !(mask >> b & 1) && g[a].first <= g[b].first && g[a].second <= g[b].second) ok = false;
    if (!ok) continue;
    IntVector v(d);
    for (std::size_t a = 0; a < d; ++a) v[a] = mask >> a & 1;
    out.insert(v);
  }
  return out;
}

inline std::set<IntVector> antichains_by_scan(int k, int n) {
  const auto g = grid(k, n);
  const std::size_t d = g.size();
  std::set<IntVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < d && ok; ++a)
      for (std::size_t b = a + 1; b < d && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1)) {
          const bool le = g[a].first <= g[b].first && g[a].second <= g[b].second;
          const bool ge = g[b].first <= g[a].first && g[b].second <= g[a].second;
          if (le || ge) ok = false;
        }
    if (!ok) continue;
    IntVector v(d);
    for (std::size_t a = 0; a < d; ++a) v[a] = mask >> a & 1;
    out.insert(v);
  }
  return out;
}

/// Integer points of t times the order polytope: 0 <= x <= t and x monotone along the order.
inline std::uint64_t order_points_by_scan(int k, int n, int t) {
  const auto g = grid(k, n);
  const std::size_t d = g.size();
  IntVector x(d, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < d && ok; ++a)
      for (std::size_t b = 0; b < d && ok; ++b)
        if (g[a].first <= g[b].first && g[a].second <= g[b].second && x[a] > x[b]) ok = false;
    count += ok;
    std::size_t i = 0;
    while (i < d && x[i] == t) x[i++] = 0;
    if (i == d) break;
    ++x[i];
  }
  return count;
}

/// Semistandard tableaux of rectangular shape (t^k) with entries <= n, by the hook-content formula.
inline std::uint64_t ssyt_rectangle(int k, int n, int t) {
  Rational value = 1;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < t; ++c) {
      const int content = c - r;
      const int hook = (t - c - 1) + (k - r - 1) + 1;
      value *= Rational(n + content, hook);
    }
  return numerator(value).convert_to<std::uint64_t>();
}

}  // namespace oracle
