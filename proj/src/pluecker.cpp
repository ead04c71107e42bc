#include "matchfield/pluecker.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "matchfield/errors.hpp"
#include "matchfield/linalg.hpp"

namespace matchfield {

namespace {

/// Sign of sorting `entries`, or 0 if two entries coincide.
int sort_sign(std::vector<int>& entries) {
  int sign = 1;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i] == entries[j]) return 0;
      if (entries[i] > entries[j]) sign = -sign;
    }
  std::sort(entries.begin(), entries.end());
  return sign;
}

}  // namespace

InitialTerm initial_term(const WeightMatrix& weights, const Subset& subset) {
  const Assignment best = minimal_assignment(weights, subset);
  if (!best.unique) throw NonGenericError("weight matrix is not generic on " + format_subset(subset));
  InitialTerm term;
  term.subset = subset;
  term.assignment = best.tuple;
  term.weight = best.weight;
  std::vector<int> order = best.tuple;
  term.sign = sort_sign(order);
  return term;
}

const Rational& InducedWeight::operator[](const Subset& subset) const {
  return values.at(subset_rank(subset, n));
}

InducedWeight induced_weight(const WeightMatrix& weights) {
  InducedWeight w;
  w.k = weights.rows();
  w.n = weights.cols();
  w.subsets = k_subsets(w.n, w.k);
  for (const auto& s : w.subsets) w.values.push_back(minimal_assignment(weights, s).weight);
  return w;
}

std::string format_term(const PlueckerTerm& term, bool leading) {
  std::string out;
  const long long c = term.coefficient;
  if (c < 0) out += leading ? "-" : " - ";
  else if (!leading) out += " + ";
  const long long mag = c < 0 ? -c : c;
  if (mag != 1) out += std::to_string(mag) + "*";
  auto name = [](const Subset& s) {
    const bool short_form = std::all_of(s.begin(), s.end(), [](int x) { return x < 10; });
    std::string p = "P";
    for (std::size_t i = 0; i < s.size(); ++i) p += (i && !short_form ? "_" : "") + std::to_string(s[i]);
    return p;
  };
  return out + name(term.first) + "*" + name(term.second);
}

std::string PlueckerRelation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += format_term(terms[i], i == 0);
  return out.empty() ? "0" : out;
}

std::vector<PlueckerRelation> gp_relations(int k, int n) {
  if (k < 2 || k >= n) throw std::invalid_argument("gp_relations: requires 2 <= k < n");
  std::vector<PlueckerRelation> out;
  std::set<std::vector<PlueckerTerm>> seen;
  for (const auto& a : k_subsets(n, k - 1)) {
    for (const auto& b : k_subsets(n, k + 1)) {
      std::map<std::pair<Subset, Subset>, long long> combined;
      for (std::size_t l = 0; l < b.size(); ++l) {
        std::vector<int> left = a;
        left.push_back(b[l]);
        const int s1 = sort_sign(left);
        if (s1 == 0) continue;
        Subset right;
        for (std::size_t m = 0; m < b.size(); ++m)
          if (m != l) right.push_back(b[m]);
        const int sign = (l % 2 == 0 ? -1 : 1) * s1;
        auto key = left <= right ? std::make_pair(left, right) : std::make_pair(right, left);
        combined[key] += sign;
      }
      PlueckerRelation rel;
      rel.a = a;
      rel.b = b;
      for (const auto& [key, c] : combined)
        if (c != 0) rel.terms.push_back({c, key.first, key.second});
      if (rel.terms.empty()) continue;
      if (rel.terms.front().coefficient < 0)
        for (auto& t : rel.terms) t.coefficient = -t.coefficient;
      if (!seen.insert(rel.terms).second) continue;
      out.push_back(std::move(rel));
    }
  }
  return out;
}

namespace {

Rational minor(const RationalMatrix& matrix, const Subset& cols) {
  RationalMatrix sub(matrix.size(), RationalVector(cols.size()));
  for (std::size_t r = 0; r < matrix.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub[r][c] = matrix[r][cols[c] - 1];
  return linalg::determinant(std::move(sub));
}

}  // namespace

Rational evaluate_relation(const PlueckerRelation& relation, const RationalMatrix& matrix) {
  Rational total = 0;
  for (const auto& t : relation.terms) total += Rational(t.coefficient) * minor(matrix, t.first) * minor(matrix, t.second);
  return total;
}

RationalMatrix random_rational_matrix(int k, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RationalMatrix m(k, RationalVector(n));
  for (auto& row : m)
    for (auto& x : row) {
      const long long p = static_cast<long long>(rng() % 19) - 9;
      const long long q = static_cast<long long>(rng() % 9) + 1;
      x = Rational(p) / q;
    }
  return m;
}

GpCheck check_gp_relations(const std::vector<PlueckerRelation>& relations, int k, int n, std::uint64_t seed,
                           std::size_t matrices) {
  GpCheck check;
  check.relations = relations.size();
  check.matrices = matrices;
  for (std::size_t m = 0; m < matrices; ++m) {
    const RationalMatrix x = random_rational_matrix(k, n, seed + m);
    std::map<Subset, Rational> minors;
    for (const auto& s : k_subsets(n, k)) minors.emplace(s, minor(x, s));
    for (const auto& rel : relations) {
      Rational total = 0;
      for (const auto& t : rel.terms) total += Rational(t.coefficient) * minors.at(t.first) * minors.at(t.second);
      if (total != 0) ++check.failures;
    }
  }
  return check;
}

InitialForm initial_form(const PlueckerRelation& relation, const InducedWeight& weight) {
  InitialForm form;
  if (relation.terms.empty()) return form;
  std::vector<Rational> w;
  for (const auto& t : relation.terms) w.push_back(weight[t.first] + weight[t.second]);
  form.weight = *std::min_element(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == form.weight) form.terms.push_back(relation.terms[i]);
  form.binomial = form.terms.size() == 2;
  return form;
}

}  // namespace matchfield
