#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "matchfield/rational.hpp"

namespace matchfield {

/// An element (i, j) of the grid poset, 1-based: 1 <= i <= k, 1 <= j <= n - k.
struct PosetElement {
  int row = 1;
  int col = 1;
  auto operator<=>(const PosetElement&) const = default;
};

/// The Grassmannian poset Q_{k,n}: the k x (n-k) grid under the componentwise order.
/// Coordinates of every vector indexed by the poset follow row-major order of (i, j).
class GrassmannPoset {
 public:
  GrassmannPoset(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int rows() const { return k_; }
  int cols() const { return n_ - k_; }
  std::size_t size() const { return elements_.size(); }

  const std::vector<PosetElement>& elements() const { return elements_; }
  const PosetElement& element(std::size_t index) const { return elements_.at(index); }
  std::size_t index_of(const PosetElement& e) const;
  bool contains(const PosetElement& e) const;

  bool less_equal(const PosetElement& a, const PosetElement& b) const {
    return a.row <= b.row && a.col <= b.col;
  }
  bool less(const PosetElement& a, const PosetElement& b) const { return a != b && less_equal(a, b); }
  bool comparable(const PosetElement& a, const PosetElement& b) const {
    return less_equal(a, b) || less_equal(b, a);
  }

  /// Pairs (a, b) of element indices with b covering a.
  std::vector<std::pair<std::size_t, std::size_t>> covering_relations() const;

  /// Every maximal chain, as element indices from (1,1) to (k, n-k).
  std::vector<std::vector<std::size_t>> maximal_chains() const;

  /// Number of elements of a longest chain, k + (n-k) - 1.
  int longest_chain_length() const { return n_ - 1; }

 private:
  int k_;
  int n_;
  std::vector<PosetElement> elements_;
};

/// Upward-closed subset; members sorted row-major.
struct Filter {
  std::vector<PosetElement> members;
  bool operator==(const Filter&) const = default;
};

/// Pairwise incomparable subset; members sorted row-major.
struct AntiChain {
  std::vector<PosetElement> members;
  bool operator==(const AntiChain&) const = default;
};

bool is_filter(const GrassmannPoset& poset, const std::vector<PosetElement>& members);
bool is_antichain(const GrassmannPoset& poset, const std::vector<PosetElement>& members);

/// Validates and sorts; throws std::invalid_argument if not upward closed.
Filter make_filter(const GrassmannPoset& poset, std::vector<PosetElement> members);
AntiChain make_antichain(const GrassmannPoset& poset, std::vector<PosetElement> members);

Filter upward_closure(const GrassmannPoset& poset, const std::vector<PosetElement>& generators);

/// Minimal elements of a filter. Throws std::invalid_argument when `members` is not a filter.
AntiChain min_elements(const GrassmannPoset& poset, const std::vector<PosetElement>& members);
AntiChain min_elements(const GrassmannPoset& poset, const Filter& filter);

IntVector characteristic_vector(const GrassmannPoset& poset, const std::vector<PosetElement>& members);

/// All anti-chains by depth-first search in row-major order, sorted by characteristic vector.
std::vector<AntiChain> enumerate_antichains(const GrassmannPoset& poset);

/// All filters (including the empty one) as upward closures of anti-chains,
/// sorted by characteristic vector.
std::vector<Filter> enumerate_filters(const GrassmannPoset& poset);

std::vector<IntVector> order_polytope_vertices(const GrassmannPoset& poset);
std::vector<IntVector> chain_polytope_vertices(const GrassmannPoset& poset);

/// Exact membership in the order polytope: 0 <= x <= 1 and x monotone along the order.
bool order_polytope_contains(const GrassmannPoset& poset, const RationalVector& x);

/// Exact membership in the chain polytope: x >= 0 and every maximal chain sums to at most 1.
bool chain_polytope_contains(const GrassmannPoset& poset, const RationalVector& x);

/// Lattice points of the t-th dilates, counted directly from the inequality descriptions.
std::uint64_t order_polytope_lattice_points(const GrassmannPoset& poset, int t);
std::uint64_t chain_polytope_lattice_points(const GrassmannPoset& poset, int t);

}  // namespace matchfield
