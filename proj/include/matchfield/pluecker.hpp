#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "matchfield/matching_field.hpp"

namespace matchfield {

/// Initial term of the maximal minor on the columns J: the monomial prod x_{i, tuple[i]}.
struct InitialTerm {
  Subset subset;
  int sign = 1;  // sign of the permutation taking J (ascending) to the tuple
  Tuple assignment;
  Rational weight;
};

/// Throws NonGenericError when two assignments tie.
InitialTerm initial_term(const WeightMatrix& weights, const Subset& subset);

/// w_J = minimal assignment weight, for every k-subset in lexicographic order.
struct InducedWeight {
  int k = 0;
  int n = 0;
  std::vector<Subset> subsets;
  RationalVector values;

  const Rational& operator[](const Subset& subset) const;
};

InducedWeight induced_weight(const WeightMatrix& weights);

/// coefficient * P_first * P_second, with first <= second.
struct PlueckerTerm {
  long long coefficient = 0;
  Subset first;
  Subset second;
  auto operator<=>(const PlueckerTerm&) const = default;
};

struct PlueckerRelation {
  Subset a;  // (k-1)-subset
  Subset b;  // (k+1)-subset
  std::vector<PlueckerTerm> terms;

  std::string to_string() const;
};

/// Exchange relations sum_l (-1)^l P_{A b_l} P_{B - b_l}, with like terms combined,
/// zero relations dropped, duplicates removed, and the first coefficient made positive.
std::vector<PlueckerRelation> gp_relations(int k, int n);

/// Value of the relation at the maximal minors of a k x n matrix.
Rational evaluate_relation(const PlueckerRelation& relation, const RationalMatrix& matrix);

/// Pseudo-random k x n matrix with entries p/q, |p| <= 9, 1 <= q <= 9.
RationalMatrix random_rational_matrix(int k, int n, std::uint64_t seed);

struct GpCheck {
  std::size_t relations = 0;
  std::size_t matrices = 0;
  std::size_t failures = 0;
};

/// Evaluates every relation on `matrices` random matrices derived from `seed`.
GpCheck check_gp_relations(const std::vector<PlueckerRelation>& relations, int k, int n, std::uint64_t seed,
                           std::size_t matrices = 5);

struct InitialForm {
  std::vector<PlueckerTerm> terms;
  Rational weight;
  bool binomial = false;
};

/// Terms of minimal weight w_first + w_second.
InitialForm initial_form(const PlueckerRelation& relation, const InducedWeight& weight);

std::string format_term(const PlueckerTerm& term, bool leading);

}  // namespace matchfield
