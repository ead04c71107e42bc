#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchfield/limits.hpp"
#include "matchfield/matching_field.hpp"
#include "matchfield/polytope.hpp"

namespace matchfield {

/// Primitive direction w with a factor vertex set F inside w^perp.
class MutationData {
 public:
  /// Throws std::invalid_argument if w is not primitive, F is empty, or some f has <f, w> != 0.
  MutationData(IntVector w, std::vector<IntVector> factor);

  const IntVector& w() const { return w_; }
  const std::vector<IntVector>& factor() const { return factor_; }
  std::size_t dim() const { return w_.size(); }

  /// Same F, direction -w; the tropical map of the result undoes this one.
  MutationData inverse() const;

 private:
  IntVector w_;
  std::vector<IntVector> factor_;
};

/// min over f in F of <x, f>.
Rational min_pairing(const MutationData& data, const RationalVector& x);

/// x -> x - min_f <x, f> * w.
RationalVector tropical_map(const MutationData& data, const RationalVector& x);
IntVector tropical_map(const MutationData& data, const IntVector& x);

/// Extreme points of a planar point set, counter-clockwise from the lowest-leftmost.
/// Points in the relative interior of an edge are dropped.
std::vector<IntVector> convex_hull_2d(std::vector<IntVector> points);

struct MappedPolytope {
  std::vector<IntVector> images;   // aligned with the input vertices
  std::vector<bool> extremal;      // images[i] is a vertex of the image polytope
  std::vector<IntVector> vertices; // hull order in dimension 2, sorted otherwise
};

MappedPolytope map_polytope(const MutationData& data, const LatticePolytope& polytope);

/// w^i and f^i of the chain step with triple (p, l, q).
IntVector mutation_direction(int k, int n, const Triple& triple);
IntVector mutation_factor(int k, int n, const Triple& triple);

/// (w^i, {0, f^i}) for 1 <= i <= last index.
MutationData mutation_data(int k, int n, std::size_t index);

/// Before: vertices of P_{i-1} under phi^i. After: vertices of P_i under the inverse map.
enum class Side { Before, After };
std::string to_string(Side side);

struct VertexValue {
  Subset subset;
  Tuple tuple;
  int value = 0;      // <f^i, v_J>
  int predicate = 0;  // case analysis on the entries at positions l and l + 1
};

/// Throws VerificationError if the dot product and the predicate disagree or leave {-1, 0, 1}.
std::vector<VertexValue> classify_vertices(int k, int n, std::size_t index, Side side);

/// Case analysis for the value of f^i on the vertex of `tuple`.
int inner_product_predicate(const Tuple& tuple, const Triple& triple, Side side);

struct PairWitness {
  Subset positive;  // value +1
  Subset negative;  // value -1
  Subset constructive_first;
  Subset constructive_second;
  bool constructive_valid = false;
  std::optional<Subset> search_first;
  std::optional<Subset> search_second;

  bool valid() const { return constructive_valid && search_first.has_value(); }
};

struct MutationCertificate {
  std::size_t index = 0;
  Side side = Side::Before;
  std::vector<Subset> negative;
  std::vector<Subset> zero;
  std::vector<Subset> positive;
  std::vector<PairWitness> witnesses;

  bool passed() const;
};

/// For every (+1, -1) pair: the splice of the two tuples at position l, and the first
/// pair of f-orthogonal vertices with the same sum in lexicographic order.
MutationCertificate pair_certificate(int k, int n, std::size_t index, Side side);

struct StepReport {
  std::size_t index = 0;
  Triple triple;
  bool bijection = false;      // phi^i maps V(P_{i-1}) onto V(P_i)
  bool matches_swap = false;   // agrees vertex-wise with swap_step
  bool inverse_ok = false;     // the inverse map recovers every vertex
  MutationCertificate before;
  MutationCertificate after;
  std::vector<std::string> issues;

  bool passed() const { return bijection && matches_swap && inverse_ok && before.passed() && after.passed(); }
};

StepReport verify_step(int k, int n, std::size_t index);

struct ChainOptions {
  int ehrhart_depth = 0;  // count lattice points for t = 1..depth at every index
  ResourceLimits limits;
};

struct ChainReport {
  int k = 0;
  int n = 0;
  std::vector<StepReport> steps;
  bool starts_at_diagonal = false;
  bool ends_at_fflv = false;
  std::vector<std::vector<std::uint64_t>> counts;  // counts[t - 1][i]
  bool counts_constant = true;

  bool passed() const;
};

ChainReport verify_chain(int k, int n, const ChainOptions& options = {});

}  // namespace matchfield
