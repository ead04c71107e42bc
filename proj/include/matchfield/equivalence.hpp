#pragma once

#include <string>
#include <vector>

#include "matchfield/matching_field.hpp"
#include "matchfield/poset.hpp"
#include "matchfield/polytope.hpp"

// Explicit lattice maps relating the poset polytopes of Q_{k,n} to matching-field
// polytopes. Poset-side vectors use the row-major coordinates of GrassmannPoset;
// matrix-side vectors are k x n, row-major.
namespace matchfield {

/// s_F(i): number of elements of the filter in row i.
std::vector<int> filter_row_counts(const GrassmannPoset& poset, const Filter& filter);
/// J(F) = { i + s_F(i) }.
Subset filter_subset(const GrassmannPoset& poset, const Filter& filter);

/// x_{i,j} -> y_{i,(n-k-j)+i+1} - y_{i,(n-k-j)+i}, translated by the vertex of {1..k}.
AffineMap gt_equivalence_map(int k, int n);

/// Generators y_{i,j} - y_{i,i}, j = i+1..n-k+i, of the lattice the diagonal polytope spans.
std::vector<IntVector> gt_target_lattice_generators(int k, int n);

/// e_{i,j} -> coordinate of poset element (k+1-i, j-k) for j > k, and 0 for j <= k.
AffineMap fflv_projection(int k, int n);

/// Gr(3,n): keeps columns 3..n-1 of the 3 x n matrix; entry (r, c) -> poset element (4-r, c-2).
AffineMap gr3_block_projection(int n);

/// True when U with images = U * generators exists, is integral and has det +-1.
bool is_lattice_basis_change(const std::vector<IntVector>& images, const std::vector<IntVector>& generators);

/// True when the linear part of `map` preserves the rank of the vertex differences, so
/// it is injective on the affine lattice the vertices generate.
bool injective_on_vertex_lattice(const AffineMap& map, const std::vector<IntVector>& vertices);

struct EquivalenceReport {
  bool images_match = false;   // image vertex set equals the expected vertex set
  bool injective = false;      // distinct vertices have distinct images
  bool lattice_ok = false;     // unimodularity check on the relevant lattice
  bool pointwise_ok = true;    // vertex-by-vertex correspondence stated with the map
  std::size_t source_vertices = 0;
  std::size_t target_vertices = 0;
  std::vector<std::string> issues;

  bool passed() const { return images_match && injective && lattice_ok && pointwise_ok; }
};

/// Order polytope of Q_{k,n} onto the diagonal matching-field polytope, with chi_F -> v_{J(F)}.
EquivalenceReport verify_gt_equivalence(int k, int n);
/// FFLV matching-field polytope onto the chain polytope of Q_{k,n}.
EquivalenceReport verify_fflv_projection(int k, int n);
/// Block-diagonal matching-field polytope of Gr(3,n) onto the chain polytope of Q_{3,n}.
EquivalenceReport verify_gr3_block_projection(int n);

}  // namespace matchfield
