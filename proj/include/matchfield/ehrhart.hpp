#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchfield/limits.hpp"
#include "matchfield/poset.hpp"
#include "matchfield/polytope.hpp"
#include "matchfield/rational.hpp"

namespace matchfield {

/// Polynomial in t with exact rational coefficients, constant term first.
struct EhrhartPolynomial {
  RationalVector coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational operator()(const Rational& t) const;
  bool operator==(const EhrhartPolynomial& other) const { return coefficients == other.coefficients; }
  std::string to_string() const;
};

/// Unique polynomial of degree <= values.size() - 1 through (t, values[t]), t = 0, 1, ...
EhrhartPolynomial interpolate(const std::vector<std::uint64_t>& values);

struct EhrhartResult {
  std::size_t dimension = 0;
  std::vector<std::uint64_t> counts;  // counts[t] for t = 0..dimension
  EhrhartPolynomial polynomial;
};

/// Counts t = 0..d lattice points, d the affine dimension, and interpolates.
EhrhartResult ehrhart(const LatticePolytope& polytope, const ResourceLimits& limits = {});

/// Same, counting with the inequality descriptions of the poset polytopes.
EhrhartResult ehrhart_order_polytope(const GrassmannPoset& poset);
EhrhartResult ehrhart_chain_polytope(const GrassmannPoset& poset);

}  // namespace matchfield
