#include "matchfield/equivalence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "matchfield/linalg.hpp"

namespace matchfield {

std::vector<int> filter_row_counts(const GrassmannPoset& poset, const Filter& filter) {
  std::vector<int> counts(poset.rows(), 0);
  for (const auto& e : filter.members) {
    poset.index_of(e);
    ++counts[e.row - 1];
  }
  return counts;
}

Subset filter_subset(const GrassmannPoset& poset, const Filter& filter) {
  if (!is_filter(poset, filter.members)) throw std::invalid_argument("filter_subset: input is not a filter");
  auto counts = filter_row_counts(poset, filter);
  Subset j;
  for (int i = 1; i <= poset.rows(); ++i) j.push_back(i + counts[i - 1]);
  return j;
}

AffineMap gt_equivalence_map(int k, int n) {
  GrassmannPoset poset(k, n);
  AffineMap map;
  map.linear.assign(static_cast<std::size_t>(k) * n, IntVector(poset.size(), 0));
  map.translation.assign(static_cast<std::size_t>(k) * n, 0);
  auto y = [n](int i, int j) { return static_cast<std::size_t>(i - 1) * n + (j - 1); };
  for (std::size_t c = 0; c < poset.size(); ++c) {
    const auto [i, j] = poset.element(c);
    const int col = (n - k - j) + i;
    map.linear[y(i, col + 1)][c] += 1;
    map.linear[y(i, col)][c] -= 1;
  }
  for (int i = 1; i <= k; ++i) map.translation[y(i, i)] = 1;
  return map;
}

std::vector<IntVector> gt_target_lattice_generators(int k, int n) {
  std::vector<IntVector> gens;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= n - k + i; ++j) {
      IntVector g(static_cast<std::size_t>(k) * n, 0);
      g[static_cast<std::size_t>(i - 1) * n + (j - 1)] += 1;
      g[static_cast<std::size_t>(i - 1) * n + (i - 1)] -= 1;
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

AffineMap fflv_projection(int k, int n) {
  GrassmannPoset poset(k, n);
  AffineMap map;
  map.linear.assign(poset.size(), IntVector(static_cast<std::size_t>(k) * n, 0));
  map.translation.assign(poset.size(), 0);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j)
      map.linear[poset.index_of({k + 1 - i, j - k})][static_cast<std::size_t>(i - 1) * n + (j - 1)] = 1;
  return map;
}

AffineMap gr3_block_projection(int n) {
  GrassmannPoset poset(3, n);
  AffineMap map;
  map.linear.assign(poset.size(), IntVector(static_cast<std::size_t>(3) * n, 0));
  map.translation.assign(poset.size(), 0);
  for (int r = 1; r <= 3; ++r)
    for (int c = 3; c <= n - 1; ++c)
      map.linear[poset.index_of({4 - r, c - 2})][static_cast<std::size_t>(r - 1) * n + (c - 1)] = 1;
  return map;
}

bool is_lattice_basis_change(const std::vector<IntVector>& images, const std::vector<IntVector>& generators) {
  const std::size_t m = generators.size();
  if (images.size() != m || m == 0) return false;
  if (linalg::rank(generators) != m || linalg::rank(images) != m) return false;
  const std::size_t dim = generators.front().size();
  // Pick m independent coordinates of the generators.
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < dim && cols.size() < m; ++c) {
    RationalMatrix trial;
    for (const auto& g : generators) {
      RationalVector row;
      for (auto cc : cols) row.emplace_back(g[cc]);
      row.emplace_back(g[c]);
      trial.push_back(std::move(row));
    }
    if (linalg::rank(trial) == cols.size() + 1) cols.push_back(c);
  }
  // Column j of G_S^T solves for row j of U: images[r] restricted = sum_j U[r][j] generators[j].
  RationalMatrix gst(m, RationalVector(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) gst[a][b] = generators[b][cols[a]];
  RationalMatrix u;
  for (const auto& img : images) {
    RationalVector rhs;
    for (auto c : cols) rhs.emplace_back(img[c]);
    auto sol = linalg::solve(gst, rhs);
    if (!sol) return false;
    for (std::size_t c = 0; c < dim; ++c) {
      Rational v = 0;
      for (std::size_t j = 0; j < m; ++j) v += (*sol)[j] * generators[j][c];
      if (v != img[c]) return false;  // image outside the generated span
    }
    for (const auto& x : *sol)
      if (!is_integral(x)) return false;
    u.push_back(std::move(*sol));
  }
  Rational det = linalg::determinant(u);
  return det == 1 || det == -1;
}

bool injective_on_vertex_lattice(const AffineMap& map, const std::vector<IntVector>& vertices) {
  if (vertices.empty()) return true;
  AffineMap linear = map;
  std::fill(linear.translation.begin(), linear.translation.end(), 0);
  std::vector<IntVector> diffs, images;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    IntVector d(vertices[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = vertices[i][c] - vertices[0][c];
    images.push_back(linear.apply(d));
    diffs.push_back(std::move(d));
  }
  return linalg::rank(diffs) == linalg::rank(images);
}

namespace {

void compare_images(const AffineMap& map, const LatticePolytope& source, const std::vector<IntVector>& expected,
                    EquivalenceReport& report) {
  report.source_vertices = source.num_vertices();
  std::set<IntVector> images;
  for (const auto& v : source.vertices()) images.insert(map.apply(v));
  std::set<IntVector> target(expected.begin(), expected.end());
  report.target_vertices = target.size();
  report.injective = images.size() == source.num_vertices();
  report.images_match = images == target;
  if (!report.injective) report.issues.push_back("two vertices share an image");
  if (!report.images_match) report.issues.push_back("image vertex set differs from the target vertex set");
}

}  // namespace

EquivalenceReport verify_gt_equivalence(int k, int n) {
  GrassmannPoset poset(k, n);
  EquivalenceReport report;
  const AffineMap map = gt_equivalence_map(k, n);
  const LatticePolytope order(poset.size(), order_polytope_vertices(poset));
  const LatticePolytope diag = polytope_of_field(diagonal(k, n));
  compare_images(map, order, diag.vertices(), report);
  for (const auto& f : enumerate_filters(poset)) {
    const Subset j = filter_subset(poset, f);
    if (map.apply(characteristic_vector(poset, f.members)) != tuple_vertex(j, n)) {
      report.pointwise_ok = false;
      report.issues.push_back("filter does not map to v_{J(F)} for J(F) = " + format_subset(j));
    }
  }
  // Standard basis of Z^{k(n-k)} must map onto a basis of the target lattice.
  std::vector<IntVector> basis_images;
  for (std::size_t c = 0; c < poset.size(); ++c) {
    IntVector e(poset.size(), 0);
    e[c] = 1;
    IntVector img(map.target_dim(), 0);
    for (std::size_t r = 0; r < map.target_dim(); ++r) img[r] = map.linear[r][c];
    basis_images.push_back(std::move(img));
  }
  report.lattice_ok = is_lattice_basis_change(basis_images, gt_target_lattice_generators(k, n));
  if (!report.lattice_ok) report.issues.push_back("linear part is not a lattice isomorphism");
  return report;
}

EquivalenceReport verify_fflv_projection(int k, int n) {
  GrassmannPoset poset(k, n);
  EquivalenceReport report;
  const AffineMap map = fflv_projection(k, n);
  const LatticePolytope source = polytope_of_field(fflv(k, n));
  compare_images(map, source, chain_polytope_vertices(poset), report);
  report.lattice_ok = injective_on_vertex_lattice(map, source.vertices());
  if (!report.lattice_ok) report.issues.push_back("projection collapses the vertex lattice");
  return report;
}

EquivalenceReport verify_gr3_block_projection(int n) {
  GrassmannPoset poset(3, n);
  EquivalenceReport report;
  const AffineMap map = gr3_block_projection(n);
  const LatticePolytope source = polytope_of_field(block_diagonal(3, n));
  compare_images(map, source, chain_polytope_vertices(poset), report);
  report.lattice_ok = injective_on_vertex_lattice(map, source.vertices());
  if (!report.lattice_ok) report.issues.push_back("projection collapses the vertex lattice");
  return report;
}

}  // namespace matchfield
