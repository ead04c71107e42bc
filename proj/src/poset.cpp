#include "matchfield/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace matchfield {

GrassmannPoset::GrassmannPoset(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("Grassmannian poset needs 1 <= k < n, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
  elements_.reserve(static_cast<std::size_t>(k) * (n - k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) elements_.push_back({i, j});
}

bool GrassmannPoset::contains(const PosetElement& e) const {
  return e.row >= 1 && e.row <= rows() && e.col >= 1 && e.col <= cols();
}

std::size_t GrassmannPoset::index_of(const PosetElement& e) const {
  if (!contains(e))
    throw std::invalid_argument("(" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                ") is not an element of the poset");
  return static_cast<std::size_t>(e.row - 1) * cols() + (e.col - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> GrassmannPoset::covering_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& e : elements_) {
    if (e.row < rows()) covers.emplace_back(index_of(e), index_of({e.row + 1, e.col}));
    if (e.col < cols()) covers.emplace_back(index_of(e), index_of({e.row, e.col + 1}));
  }
  return covers;
}

std::vector<std::vector<std::size_t>> GrassmannPoset::maximal_chains() const {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> path{index_of({1, 1})};
  std::function<void(PosetElement)> walk = [&](PosetElement e) {
    if (e.row == rows() && e.col == cols()) {
      chains.push_back(path);
      return;
    }
    for (PosetElement next : {PosetElement{e.row + 1, e.col}, PosetElement{e.row, e.col + 1}}) {
      if (!contains(next)) continue;
      path.push_back(index_of(next));
      walk(next);
      path.pop_back();
    }
  };
  walk({1, 1});
  return chains;
}

namespace {

void require_members(const GrassmannPoset& poset, const std::vector<PosetElement>& members) {
  for (const auto& e : members) poset.index_of(e);
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated poset element");
}

}  // namespace

IntVector characteristic_vector(const GrassmannPoset& poset, const std::vector<PosetElement>& members) {
  IntVector chi(poset.size(), 0);
  for (const auto& e : members) chi[poset.index_of(e)] = 1;
  return chi;
}

bool is_filter(const GrassmannPoset& poset, const std::vector<PosetElement>& members) {
  require_members(poset, members);
  IntVector chi = characteristic_vector(poset, members);
  for (auto [a, b] : poset.covering_relations())
    if (chi[a] == 1 && chi[b] == 0) return false;
  return true;
}

bool is_antichain(const GrassmannPoset& poset, const std::vector<PosetElement>& members) {
  require_members(poset, members);
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (poset.comparable(members[a], members[b])) return false;
  return true;
}

Filter make_filter(const GrassmannPoset& poset, std::vector<PosetElement> members) {
  if (!is_filter(poset, members)) throw std::invalid_argument("subset is not upward closed");
  std::sort(members.begin(), members.end());
  return Filter{std::move(members)};
}

AntiChain make_antichain(const GrassmannPoset& poset, std::vector<PosetElement> members) {
  if (!is_antichain(poset, members)) throw std::invalid_argument("subset contains comparable elements");
  std::sort(members.begin(), members.end());
  return AntiChain{std::move(members)};
}

Filter upward_closure(const GrassmannPoset& poset, const std::vector<PosetElement>& generators) {
  require_members(poset, generators);
  Filter f;
  for (const auto& e : poset.elements()) {
    bool above = std::any_of(generators.begin(), generators.end(),
                             [&](const PosetElement& g) { return poset.less_equal(g, e); });
    if (above) f.members.push_back(e);
  }
  return f;
}

AntiChain min_elements(const GrassmannPoset& poset, const std::vector<PosetElement>& members) {
  if (!is_filter(poset, members)) throw std::invalid_argument("min_elements: input is not a filter");
  AntiChain a;
  for (const auto& x : members) {
    bool minimal = std::none_of(members.begin(), members.end(),
                                [&](const PosetElement& y) { return poset.less(y, x); });
    if (minimal) a.members.push_back(x);
  }
  std::sort(a.members.begin(), a.members.end());
  return a;
}

AntiChain min_elements(const GrassmannPoset& poset, const Filter& filter) {
  return min_elements(poset, filter.members);
}

std::vector<AntiChain> enumerate_antichains(const GrassmannPoset& poset) {
  std::vector<AntiChain> out;
  std::vector<PosetElement> current;
  const auto& elems = poset.elements();
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    out.push_back(AntiChain{current});
    for (std::size_t i = start; i < elems.size(); ++i) {
      bool free = std::none_of(current.begin(), current.end(),
                               [&](const PosetElement& c) { return poset.comparable(c, elems[i]); });
      if (!free) continue;
      current.push_back(elems[i]);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [&](const AntiChain& a, const AntiChain& b) {
    return characteristic_vector(poset, a.members) < characteristic_vector(poset, b.members);
  });
  return out;
}

std::vector<Filter> enumerate_filters(const GrassmannPoset& poset) {
  std::vector<Filter> out;
  for (const auto& a : enumerate_antichains(poset)) out.push_back(upward_closure(poset, a.members));
  std::sort(out.begin(), out.end(), [&](const Filter& a, const Filter& b) {
    return characteristic_vector(poset, a.members) < characteristic_vector(poset, b.members);
  });
  return out;
}

std::vector<IntVector> order_polytope_vertices(const GrassmannPoset& poset) {
  std::vector<IntVector> out;
  for (const auto& f : enumerate_filters(poset)) out.push_back(characteristic_vector(poset, f.members));
  return out;
}

std::vector<IntVector> chain_polytope_vertices(const GrassmannPoset& poset) {
  std::vector<IntVector> out;
  for (const auto& a : enumerate_antichains(poset)) out.push_back(characteristic_vector(poset, a.members));
  return out;
}

bool order_polytope_contains(const GrassmannPoset& poset, const RationalVector& x) {
  if (x.size() != poset.size()) throw std::invalid_argument("order_polytope_contains: dimension mismatch");
  for (const auto& v : x)
    if (v < 0 || v > 1) return false;
  for (auto [a, b] : poset.covering_relations())
    if (x[a] > x[b]) return false;
  return true;
}

bool chain_polytope_contains(const GrassmannPoset& poset, const RationalVector& x) {
  if (x.size() != poset.size()) throw std::invalid_argument("chain_polytope_contains: dimension mismatch");
  for (const auto& v : x)
    if (v < 0) return false;
  // Heaviest maximal chain by dynamic programming over the grid.
  const int r = poset.rows();
  const int c = poset.cols();
  RationalMatrix best(r, RationalVector(c));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      Rational below = 0;
      if (i > 0) below = best[i - 1][j];
      if (j > 0 && best[i][j - 1] > below) below = best[i][j - 1];
      best[i][j] = x[static_cast<std::size_t>(i) * c + j] + below;
    }
  }
  return best[r - 1][c - 1] <= 1;
}

namespace {

// Row-by-row transfer: the state is a weakly increasing vector of length cols
// with entries in [0, t]; `step` enumerates successor states with multiplicity.
std::uint64_t row_transfer(int rows, int cols, const IntVector& initial,
                           const std::function<void(const IntVector&, const std::function<void(IntVector)>&)>& step) {
  std::map<IntVector, std::uint64_t> layer{{initial, 1}};
  for (int i = 0; i < rows; ++i) {
    std::map<IntVector, std::uint64_t> next;
    for (const auto& [state, count] : layer)
      step(state, [&, c = count](IntVector s) { next[std::move(s)] += c; });
    layer = std::move(next);
  }
  (void)cols;
  std::uint64_t total = 0;
  for (const auto& [state, count] : layer) total += count;
  return total;
}

}  // namespace

std::uint64_t order_polytope_lattice_points(const GrassmannPoset& poset, int t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  const int cols = poset.cols();
  // Integer points of t*O(Q): 0 <= x <= t, weakly increasing along rows and columns.
  return row_transfer(poset.rows(), cols, IntVector(cols, 0),
                      [&](const IntVector& prev, const std::function<void(IntVector)>& emit) {
                        IntVector row(cols);
                        std::function<void(int, int)> fill = [&](int j, int lo) {
                          if (j == cols) {
                            emit(row);
                            return;
                          }
                          for (int v = std::max(lo, prev[j]); v <= t; ++v) {
                            row[j] = v;
                            fill(j + 1, v);
                          }
                        };
                        fill(0, 0);
                      });
}

std::uint64_t chain_polytope_lattice_points(const GrassmannPoset& poset, int t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  const int cols = poset.cols();
  // State: heaviest chain weight ending at each element of the previous row.
  return row_transfer(poset.rows(), cols, IntVector(cols, 0),
                      [&](const IntVector& prev, const std::function<void(IntVector)>& emit) {
                        IntVector best(cols);
                        std::function<void(int)> fill = [&](int j) {
                          if (j == cols) {
                            emit(best);
                            return;
                          }
                          int base = prev[j];
                          if (j > 0) base = std::max(base, best[j - 1]);
                          for (int v = 0; base + v <= t; ++v) {
                            best[j] = base + v;
                            fill(j + 1);
                          }
                        };
                        fill(0);
                      });
}

}  // namespace matchfield
