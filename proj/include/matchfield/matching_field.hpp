#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchfield/rational.hpp"

namespace matchfield {

/// A k-subset of [n], strictly increasing, 1-based.
using Subset = std::vector<int>;
/// An arrangement of a k-subset; position i holds the column assigned to row i.
using Tuple = std::vector<int>;

/// All k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);
/// Position of J in the lexicographic list of k-subsets of [n].
std::size_t subset_rank(const Subset& subset, int n);
std::string format_subset(const std::vector<int>& entries);

class MatchingField {
 public:
  /// One tuple for each k-subset of [n], in any order. Throws std::invalid_argument
  /// if a subset is missing, repeated, or a tuple is not an arrangement of k distinct values in [n].
  MatchingField(int k, int n, std::vector<Tuple> tuples);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return tuples_.size(); }

  /// Lexicographically ordered k-subsets; `tuples()` is aligned with this list.
  const std::vector<Subset>& subsets() const { return subsets_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  const Tuple& tuple(const Subset& subset) const;

  bool operator==(const MatchingField& other) const {
    return k_ == other.k_ && n_ == other.n_ && tuples_ == other.tuples_;
  }

 private:
  int k_;
  int n_;
  std::vector<Subset> subsets_;
  std::vector<Tuple> tuples_;
};

/// k x n matrix of exact rationals. Entries are addressed 1-based as (row, column).
class WeightMatrix {
 public:
  explicit WeightMatrix(RationalMatrix entries);
  static WeightMatrix from_integers(const std::vector<std::vector<long long>>& entries);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return static_cast<int>(entries_.front().size()); }
  const Rational& operator()(int row, int col) const { return entries_[row - 1][col - 1]; }
  Rational& operator()(int row, int col) { return entries_[row - 1][col - 1]; }
  const RationalMatrix& entries() const { return entries_; }

  bool operator==(const WeightMatrix& other) const { return entries_ == other.entries_; }

 private:
  RationalMatrix entries_;
};

struct Triple {
  int p = 0;
  int l = 0;
  int q = 0;
  bool operator==(const Triple&) const = default;
};

struct TripleSequence {
  int k = 0;
  int n = 0;
  std::vector<Triple> entries;

  std::size_t size() const { return entries.size(); }
  /// Index of the final triple (2, 1, n); chain steps are 1..last_index().
  std::size_t last_index() const { return entries.size() - 1; }
  const Triple& operator[](std::size_t i) const { return entries.at(i); }
};

/// Minimal row/column assignment of the columns J to the rows of M.
struct Assignment {
  Tuple tuple;
  Rational weight;
  bool unique = true;
};

/// Minimum over all permutations, by dynamic programming over subsets of J.
Assignment minimal_assignment(const WeightMatrix& weights, const Subset& subset);

/// Throws NonGenericError naming the first subset with a tied minimum.
MatchingField induce_field(const WeightMatrix& weights);
bool is_generic(const WeightMatrix& weights);

/// (M_D)_{1,j} = 0 and (M_D)_{i,j} = (n - j) n^{i-2}.
WeightMatrix diagonal_weight_matrix(int k, int n);
/// Diag_{i,j} = (i - 1)(n + 1 - j).
WeightMatrix diag_matrix(int k, int n);
/// Row 2 is (0, n-1, n-2, ..., 1); the other rows agree with M_D.
WeightMatrix block_diagonal_weight_matrix(int k, int n);
/// Diag - D with D = N on the positions (i, i). Defaults to N = n^3; any other N is
/// checked for genericity and rejected with NonGenericError.
WeightMatrix fflv_weight_matrix(int k, int n, std::optional<Rational> big_n = std::nullopt);

MatchingField diagonal(int k, int n);
MatchingField block_diagonal(int k, int n);
MatchingField fflv(int k, int n);

/// Triples (p, l, q) from the seed (k+1, k, n) to (2, 1, n). Requires 2 <= k < n.
TripleSequence triple_sequence(int k, int n);

/// M_0 = M_D; M_i swaps entries (l_i + 1, p_i) and (l_i + 1, q_i) of M_{i-1}.
std::vector<WeightMatrix> weight_sequence(int k, int n);

/// Field induced by M_i, 0 <= i <= last index.
MatchingField intermediate_field(int k, int n, std::size_t index);

/// Swaps p and q in every tuple holding p at position l and q at position l + 1.
MatchingField swap_step(const MatchingField& field, const Triple& triple);

/// Closed-form tuple of J in the i-th intermediate field, i >= 1.
Tuple tuple_oracle(int k, int n, std::size_t index, const Subset& subset);

struct CoherenceResult {
  bool coherent = false;
  std::optional<WeightMatrix> witness;
  std::size_t constraints = 0;
};

/// Decides whether some generic weight matrix induces `field` by an exact LP that
/// maximizes the separation margin (capped at 1). A positive optimum yields a witness.
CoherenceResult coherence_check(const MatchingField& field);

}  // namespace matchfield
