#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchfield/limits.hpp"
#include "matchfield/matching_field.hpp"
#include "matchfield/rational.hpp"

namespace matchfield {

/// Row structure of a k x n ambient space; used to generate dilate candidates
/// when every vertex has exactly one 1 in each row.
struct GridShape {
  int rows = 0;
  int cols = 0;
  bool operator==(const GridShape&) const = default;
};

/// Convex hull of finitely many integer points. Vertices are stored sorted and deduplicated.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t ambient_dim, std::vector<IntVector> vertices,
                  std::optional<GridShape> grid = std::nullopt);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::optional<GridShape>& grid() const { return grid_; }

 private:
  std::size_t ambient_dim_;
  std::vector<IntVector> vertices_;
  std::optional<GridShape> grid_;
};

/// x -> linear * x + translation, with integer coefficients.
struct AffineMap {
  std::vector<IntVector> linear;  // target_dim rows, source_dim columns
  IntVector translation;

  std::size_t source_dim() const { return linear.empty() ? 0 : linear.front().size(); }
  std::size_t target_dim() const { return linear.size(); }
  IntVector apply(const IntVector& x) const;

  static AffineMap identity(std::size_t dim);
};

/// 0/1 point of a tuple: a 1 in row i at the column tuple[i], flattened row-major (k x n).
IntVector tuple_vertex(const Tuple& tuple, int n);
/// Inverse of tuple_vertex for 0/1 points with one 1 per row.
Tuple vertex_tuple(const IntVector& vertex, int k, int n);

LatticePolytope polytope_of_field(const MatchingField& field);

/// Exact test of x in t*P by LP feasibility of sum(l_v v) = x, sum(l_v) = t, l >= 0.
/// Coordinates pinned at a vertex-wise extreme value exclude vertices first.
bool contains_dilate(const LatticePolytope& polytope, const RationalVector& x, const Rational& t);
bool contains(const LatticePolytope& polytope, const RationalVector& x);

/// True when no vertex lies in the convex hull of the others.
bool all_vertices_extremal(const LatticePolytope& polytope);
/// Indices of the points that are not in the convex hull of the remaining points.
std::vector<bool> extremal_points(const std::vector<IntVector>& points);

struct LatticePointCount {
  std::uint64_t count = 0;
  std::uint64_t candidates = 0;
  std::vector<IntVector> points;  // filled when requested, in candidate order
};

/// Integer points of the t-th dilate. Candidates are row compositions of t for
/// grid polytopes and the bounding box of t*P otherwise.
/// Throws ResourceError if the candidate count exceeds limits.max_candidates.
LatticePointCount lattice_points(const LatticePolytope& polytope, int t, const ResourceLimits& limits = {},
                                 bool collect = false);

LatticePolytope apply_affine_map(const AffineMap& map, const LatticePolytope& polytope);

bool equal_vertex_sets(const LatticePolytope& a, const LatticePolytope& b);

}  // namespace matchfield
