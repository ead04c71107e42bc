#include "matchfield/matching_field.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "matchfield/errors.hpp"
#include "matchfield/lp.hpp"

namespace matchfield {

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset s(k);
  std::iota(s.begin(), s.end(), 1);
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_subset(const Subset& s, int k, int n) {
  bool ok = static_cast<int>(s.size()) == k;
  for (std::size_t i = 0; ok && i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) ok = false;
    if (i > 0 && s[i] <= s[i - 1]) ok = false;
  }
  if (!ok)
    throw std::invalid_argument(format_subset(s) + " is not an increasing " + std::to_string(k) +
                                "-subset of [" + std::to_string(n) + "]");
}

}  // namespace

std::size_t subset_rank(const Subset& subset, int n) {
  const int k = static_cast<int>(subset.size());
  require_subset(subset, k, n);
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < subset[i]; ++v) rank += binomial(n - v, k - i - 1);
    prev = subset[i];
  }
  return rank;
}

std::string format_subset(const std::vector<int>& entries) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

MatchingField::MatchingField(int k, int n, std::vector<Tuple> tuples) : k_(k), n_(n) {
  if (k < 1 || k >= n) throw std::invalid_argument("matching field needs 1 <= k < n");
  subsets_ = k_subsets(n, k);
  tuples_.assign(subsets_.size(), Tuple{});
  for (auto& t : tuples) {
    Subset s = t;
    std::sort(s.begin(), s.end());
    require_subset(s, k, n);
    std::size_t r = subset_rank(s, n);
    if (!tuples_[r].empty()) throw std::invalid_argument("subset " + format_subset(s) + " appears twice");
    tuples_[r] = std::move(t);
  }
  for (std::size_t r = 0; r < tuples_.size(); ++r)
    if (tuples_[r].empty()) throw std::invalid_argument("no tuple for subset " + format_subset(subsets_[r]));
}

const Tuple& MatchingField::tuple(const Subset& subset) const {
  require_subset(subset, k_, n_);
  return tuples_[subset_rank(subset, n_)];
}

WeightMatrix::WeightMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().empty()) throw std::invalid_argument("weight matrix is empty");
  for (const auto& row : entries_)
    if (row.size() != entries_.front().size()) throw std::invalid_argument("weight matrix rows differ in length");
}

WeightMatrix WeightMatrix::from_integers(const std::vector<std::vector<long long>>& entries) {
  RationalMatrix m;
  for (const auto& row : entries) {
    RationalVector r;
    for (long long v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return WeightMatrix(std::move(m));
}

Assignment minimal_assignment(const WeightMatrix& weights, const Subset& subset) {
  const int k = weights.rows();
  require_subset(subset, k, weights.cols());
  if (k > 20) throw std::invalid_argument("minimal_assignment supports k <= 20");
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<Rational> best(full + 1);
  std::vector<int> ways(full + 1, 0);  // number of minimizers, saturated at 2
  std::vector<int> last(full + 1, -1);
  ways[0] = 1;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const int row = std::popcount(mask);  // rows 1..row are assigned
    for (int b = 0; b < k; ++b) {
      if (!(mask >> b & 1)) continue;
      const std::size_t prev = mask ^ (std::size_t{1} << b);
      Rational w = best[prev] + weights(row, subset[b]);
      if (last[mask] < 0 || w < best[mask]) {
        best[mask] = std::move(w);
        ways[mask] = ways[prev];
        last[mask] = b;
      } else if (w == best[mask]) {
        ways[mask] = std::min(2, ways[mask] + ways[prev]);
      }
    }
  }
  Assignment a;
  a.tuple.assign(k, 0);
  a.weight = best[full];
  a.unique = ways[full] == 1;
  std::size_t mask = full;
  for (int row = k; row >= 1; --row) {
    int b = last[mask];
    a.tuple[row - 1] = subset[b];
    mask ^= std::size_t{1} << b;
  }
  return a;
}

MatchingField induce_field(const WeightMatrix& weights) {
  const int k = weights.rows();
  const int n = weights.cols();
  std::vector<Tuple> tuples;
  for (const auto& s : k_subsets(n, k)) {
    Assignment a = minimal_assignment(weights, s);
    if (!a.unique) throw NonGenericError("weight matrix is not generic on subset " + format_subset(s));
    tuples.push_back(std::move(a.tuple));
  }
  return MatchingField(k, n, std::move(tuples));
}

bool is_generic(const WeightMatrix& weights) {
  for (const auto& s : k_subsets(weights.cols(), weights.rows()))
    if (!minimal_assignment(weights, s).unique) return false;
  return true;
}

namespace {

void require_kn(int k, int n) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("need 1 <= k < n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
}

}  // namespace

WeightMatrix diagonal_weight_matrix(int k, int n) {
  require_kn(k, n);
  RationalMatrix m(k, RationalVector(n, Rational(0)));
  BigInt scale = 1;
  for (int i = 2; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = Rational(BigInt(n - j) * scale);
    scale *= n;
  }
  return WeightMatrix(std::move(m));
}

WeightMatrix diag_matrix(int k, int n) {
  require_kn(k, n);
  RationalMatrix m(k, RationalVector(n));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = (i - 1) * (n + 1 - j);
  return WeightMatrix(std::move(m));
}

WeightMatrix block_diagonal_weight_matrix(int k, int n) {
  WeightMatrix m = diagonal_weight_matrix(k, n);
  if (k >= 2) {
    m(2, 1) = 0;
    for (int j = 2; j <= n; ++j) m(2, j) = n + 1 - j;
  }
  return m;
}

WeightMatrix fflv_weight_matrix(int k, int n, std::optional<Rational> big_n) {
  WeightMatrix m = diag_matrix(k, n);
  const Rational shift = big_n ? *big_n : Rational(BigInt(n) * n * n);
  for (int i = 1; i <= k; ++i) m(i, i) -= shift;
  if (big_n && !is_generic(m))
    throw NonGenericError("N = " + to_string(*big_n) + " does not give a generic FFLV weight matrix");
  return m;
}

MatchingField diagonal(int k, int n) {
  require_kn(k, n);
  return MatchingField(k, n, k_subsets(n, k));
}

MatchingField block_diagonal(int k, int n) {
  require_kn(k, n);
  std::vector<Tuple> tuples;
  for (auto s : k_subsets(n, k)) {
    if (k >= 2 && s[0] == 1) std::swap(s[0], s[1]);
    tuples.push_back(std::move(s));
  }
  return MatchingField(k, n, std::move(tuples));
}

MatchingField fflv(int k, int n) { return induce_field(fflv_weight_matrix(k, n)); }

TripleSequence triple_sequence(int k, int n) {
  require_kn(k, n);
  if (k < 2) throw std::invalid_argument("the triple sequence is undefined for k = 1");
  TripleSequence seq{k, n, {{k + 1, k, n}}};
  while (seq.entries.back() != Triple{2, 1, n}) {
    const Triple t = seq.entries.back();
    if (t.q < n)
      seq.entries.push_back({t.p, t.l, t.q + 1});
    else if (t.l < t.p - 1)
      seq.entries.push_back({t.p, t.l + 1, k + 1});
    else
      seq.entries.push_back({t.p - 1, 1, k + 1});
  }
  return seq;
}

std::vector<WeightMatrix> weight_sequence(int k, int n) {
  const TripleSequence seq = triple_sequence(k, n);
  std::vector<WeightMatrix> out{diagonal_weight_matrix(k, n)};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    WeightMatrix m = out.back();
    const Triple& t = seq[i];
    std::swap(m(t.l + 1, t.p), m(t.l + 1, t.q));
    out.push_back(std::move(m));
  }
  return out;
}

MatchingField intermediate_field(int k, int n, std::size_t index) {
  auto seq = weight_sequence(k, n);
  if (index >= seq.size())
    throw std::out_of_range("chain index " + std::to_string(index) + " out of range [0, " +
                            std::to_string(seq.size() - 1) + "]");
  return induce_field(seq[index]);
}

MatchingField swap_step(const MatchingField& field, const Triple& triple) {
  std::vector<Tuple> tuples = field.tuples();
  const int l = triple.l;
  if (l >= 1 && l < field.k()) {
    for (auto& t : tuples)
      if (t[l - 1] == triple.p && t[l] == triple.q) std::swap(t[l - 1], t[l]);
  }
  return MatchingField(field.k(), field.n(), std::move(tuples));
}

Tuple tuple_oracle(int k, int n, std::size_t index, const Subset& subset) {
  const TripleSequence seq = triple_sequence(k, n);
  if (index < 1 || index > seq.last_index())
    throw std::out_of_range("tuple_oracle: index " + std::to_string(index) + " out of range [1, " +
                            std::to_string(seq.last_index()) + "]");
  require_subset(subset, k, n);
  const auto [p, l, q] = seq[index];

  Tuple t(k, 0);
  std::vector<int> rest;
  for (int j : subset) {
    if (j > p && j <= k)
      t[j - 1] = j;  // already moved to its own position by earlier triples
    else
      rest.push_back(j);
  }
  auto it = std::find(subset.begin(), subset.end(), p);
  if (it != subset.end()) {
    const int s = static_cast<int>(it - subset.begin()) + 1;
    if (s <= l) {
      // p has passed l - s elements larger than k; the next one decides
      // whether the swap at position l has happened yet.
      std::vector<int> large;
      for (int j : subset)
        if (j > k) large.push_back(j);
      const int next = large.at(static_cast<std::size_t>(l - s));
      t[(next <= q ? l + 1 : l) - 1] = p;
      rest.erase(std::find(rest.begin(), rest.end(), p));
    }
  }
  auto r = rest.begin();
  for (auto& x : t)
    if (x == 0) x = *r++;
  return t;
}

CoherenceResult coherence_check(const MatchingField& field) {
  const int k = field.k();
  const int n = field.n();
  const std::size_t cells = static_cast<std::size_t>(k) * n;
  // Variables: m+ (cells), m- (cells), margin. m = m+ - m-.
  const std::size_t nv = 2 * cells + 1;
  const std::size_t margin = 2 * cells;
  auto cell = [n](int row, int col) { return static_cast<std::size_t>(row - 1) * n + (col - 1); };

  lp::Problem problem;
  problem.num_variables = nv;
  problem.sense = lp::Sense::Maximize;
  problem.objective.assign(nv, Rational(0));
  problem.objective[margin] = 1;

  for (std::size_t r = 0; r < field.size(); ++r) {
    const Tuple& chosen = field.tuples()[r];
    Tuple other = field.subsets()[r];
    do {
      if (other == chosen) continue;
      RationalVector coeff(nv, Rational(0));
      for (int i = 1; i <= k; ++i) {
        coeff[cell(i, chosen[i - 1])] += 1;
        coeff[cell(i, other[i - 1])] -= 1;
      }
      for (std::size_t c = 0; c < cells; ++c) coeff[cells + c] = -coeff[c];
      coeff[margin] = 1;
      problem.constraints.push_back({std::move(coeff), lp::Relation::LessEqual, 0});
    } while (std::next_permutation(other.begin(), other.end()));
  }
  CoherenceResult result;
  result.constraints = problem.constraints.size();
  RationalVector cap(nv, Rational(0));
  cap[margin] = 1;
  problem.constraints.push_back({std::move(cap), lp::Relation::LessEqual, 1});

  const lp::Solution sol = lp::solve(problem);
  if (sol.status != lp::Status::Optimal) throw VerificationError("coherence LP did not reach an optimum");
  if (sol.objective <= 0) return result;

  RationalMatrix m(k, RationalVector(n));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = sol.values[cell(i, j)] - sol.values[cells + cell(i, j)];
  result.coherent = true;
  result.witness = WeightMatrix(std::move(m));
  return result;
}

}  // namespace matchfield
