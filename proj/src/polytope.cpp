#include "matchfield/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "matchfield/errors.hpp"
#include "matchfield/lp.hpp"

namespace matchfield {

void ResourceLimits::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw ResourceError("time limit exceeded");
}

unsigned ResourceLimits::worker_count() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("MATCHFIELD_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ResourceLimits ResourceLimits::with_timeout(std::chrono::milliseconds timeout) {
  ResourceLimits limits;
  limits.deadline = std::chrono::steady_clock::now() + timeout;
  return limits;
}

LatticePolytope::LatticePolytope(std::size_t ambient_dim, std::vector<IntVector> vertices,
                                 std::optional<GridShape> grid)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)), grid_(grid) {
  if (vertices_.empty()) throw std::invalid_argument("a lattice polytope needs at least one vertex");
  for (const auto& v : vertices_)
    if (v.size() != ambient_dim_) throw std::invalid_argument("vertex dimension differs from ambient dimension");
  if (grid_ && static_cast<std::size_t>(grid_->rows) * grid_->cols != ambient_dim_)
    throw std::invalid_argument("grid shape does not match ambient dimension");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

IntVector AffineMap::apply(const IntVector& x) const {
  if (x.size() != source_dim()) throw std::invalid_argument("affine map: dimension mismatch");
  IntVector y = translation;
  for (std::size_t r = 0; r < linear.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += linear[r][c] * x[c];
  return y;
}

AffineMap AffineMap::identity(std::size_t dim) {
  AffineMap m;
  m.linear.assign(dim, IntVector(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) m.linear[i][i] = 1;
  m.translation.assign(dim, 0);
  return m;
}

IntVector tuple_vertex(const Tuple& tuple, int n) {
  IntVector v(tuple.size() * n, 0);
  for (std::size_t i = 0; i < tuple.size(); ++i) v[i * n + (tuple[i] - 1)] = 1;
  return v;
}

Tuple vertex_tuple(const IntVector& vertex, int k, int n) {
  if (vertex.size() != static_cast<std::size_t>(k) * n) throw std::invalid_argument("vertex_tuple: dimension mismatch");
  Tuple t(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      int x = vertex[static_cast<std::size_t>(i) * n + j];
      if (x == 0) continue;
      if (x != 1 || t[i] != 0) throw std::invalid_argument("vertex_tuple: not a 0/1 point with one 1 per row");
      t[i] = j + 1;
    }
    if (t[i] == 0) throw std::invalid_argument("vertex_tuple: empty row");
  }
  return t;
}

LatticePolytope polytope_of_field(const MatchingField& field) {
  std::vector<IntVector> vertices;
  vertices.reserve(field.size());
  for (const auto& t : field.tuples()) vertices.push_back(tuple_vertex(t, field.n()));
  return LatticePolytope(static_cast<std::size_t>(field.k()) * field.n(), std::move(vertices),
                         GridShape{field.k(), field.n()});
}

namespace {

bool in_hull_of(const std::vector<const IntVector*>& points, const RationalVector& x, const Rational& t) {
  const std::size_t dim = x.size();
  if (t == 0) return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
  if (points.empty()) return false;

  std::vector<bool> eligible(points.size(), true);
  for (std::size_t c = 0; c < dim; ++c) {
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto* p : points) {
      lo = std::min(lo, (*p)[c]);
      hi = std::max(hi, (*p)[c]);
    }
    if (x[c] < t * lo || x[c] > t * hi) return false;
    const bool at_lo = x[c] == t * lo;
    const bool at_hi = x[c] == t * hi;
    if (!at_lo && !at_hi) continue;
    for (std::size_t v = 0; v < points.size(); ++v) {
      if (at_lo && (*points[v])[c] > lo) eligible[v] = false;
      if (at_hi && (*points[v])[c] < hi) eligible[v] = false;
    }
  }
  std::vector<const IntVector*> live;
  for (std::size_t v = 0; v < points.size(); ++v)
    if (eligible[v]) live.push_back(points[v]);
  if (live.empty()) return false;

  lp::Problem problem;
  problem.num_variables = live.size();
  for (std::size_t c = 0; c < dim; ++c) {
    const int first = (*live.front())[c];
    bool constant = std::all_of(live.begin(), live.end(), [&](const IntVector* p) { return (*p)[c] == first; });
    if (constant) {
      if (x[c] != t * first) return false;
      continue;
    }
    RationalVector row;
    row.reserve(live.size());
    for (const auto* p : live) row.emplace_back((*p)[c]);
    problem.constraints.push_back({std::move(row), lp::Relation::Equal, x[c]});
  }
  if (problem.constraints.empty()) return true;
  problem.constraints.push_back({RationalVector(live.size(), Rational(1)), lp::Relation::Equal, t});
  return lp::solve(problem).status == lp::Status::Optimal;
}

std::vector<const IntVector*> pointers(const std::vector<IntVector>& points) {
  std::vector<const IntVector*> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(&p);
  return out;
}

}  // namespace

bool contains_dilate(const LatticePolytope& polytope, const RationalVector& x, const Rational& t) {
  if (x.size() != polytope.ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
  if (t < 0) throw std::invalid_argument("contains: negative dilation");
  return in_hull_of(pointers(polytope.vertices()), x, t);
}

bool contains(const LatticePolytope& polytope, const RationalVector& x) {
  return contains_dilate(polytope, x, Rational(1));
}

std::vector<bool> extremal_points(const std::vector<IntVector>& points) {
  std::vector<bool> out(points.size(), true);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<const IntVector*> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i && points[j] != points[i]) others.push_back(&points[j]);
    // Duplicates of a point make it non-extremal only for the later copies.
    bool duplicate = false;
    for (std::size_t j = 0; j < i; ++j) duplicate = duplicate || points[j] == points[i];
    out[i] = !duplicate && !in_hull_of(others, to_rational(points[i]), Rational(1));
  }
  return out;
}

bool all_vertices_extremal(const LatticePolytope& polytope) {
  auto flags = extremal_points(polytope.vertices());
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void compositions(int total, int parts, IntVector& current, std::vector<IntVector>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    current.push_back(v);
    compositions(total - v, parts - 1, current, out);
    current.pop_back();
  }
}

bool grid_structured(const LatticePolytope& p) {
  if (!p.grid()) return false;
  const int rows = p.grid()->rows;
  const int cols = p.grid()->cols;
  for (const auto& v : p.vertices()) {
    for (int i = 0; i < rows; ++i) {
      int sum = 0;
      for (int j = 0; j < cols; ++j) {
        int x = v[static_cast<std::size_t>(i) * cols + j];
        if (x != 0 && x != 1) return false;
        sum += x;
      }
      if (sum != 1) return false;
    }
  }
  return true;
}

}  // namespace

LatticePointCount lattice_points(const LatticePolytope& polytope, int t, const ResourceLimits& limits, bool collect) {
  if (t < 0) throw std::invalid_argument("lattice_points: dilation must be nonnegative");
  const std::size_t dim = polytope.ambient_dim();

  // Each factor covers a consecutive block of coordinates; a candidate picks one
  // block value per factor.
  std::vector<std::vector<IntVector>> factors;
  if (grid_structured(polytope)) {
    std::vector<IntVector> row_values;
    IntVector scratch;
    compositions(t, polytope.grid()->cols, scratch, row_values);
    factors.assign(polytope.grid()->rows, row_values);
  } else {
    for (std::size_t c = 0; c < dim; ++c) {
      int lo = std::numeric_limits<int>::max();
      int hi = std::numeric_limits<int>::min();
      for (const auto& v : polytope.vertices()) {
        lo = std::min(lo, v[c]);
        hi = std::max(hi, v[c]);
      }
      std::vector<IntVector> values;
      for (long long x = static_cast<long long>(t) * hi; x >= static_cast<long long>(t) * lo; --x)
        values.push_back({static_cast<int>(x)});
      std::reverse(values.begin(), values.end());
      factors.push_back(std::move(values));
    }
  }

  std::uint64_t total = 1;
  for (const auto& f : factors) total = saturating_mul(total, f.size());
  if (total > limits.max_candidates)
    throw ResourceError("dilate t=" + std::to_string(t) + " needs " +
                        (total == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                             : std::to_string(total)) +
                        " candidates, cap is " + std::to_string(limits.max_candidates));

  const Rational scale(t);
  auto decode = [&](std::uint64_t index, IntVector& out) {
    out.clear();
    std::vector<std::size_t> digits(factors.size());
    for (std::size_t f = factors.size(); f-- > 0;) {
      digits[f] = index % factors[f].size();
      index /= factors[f].size();
    }
    for (std::size_t f = 0; f < factors.size(); ++f)
      out.insert(out.end(), factors[f][digits[f]].begin(), factors[f][digits[f]].end());
  };

  const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(limits.worker_count(), total)));
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::vector<IntVector>> found(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
      IntVector x;
      for (std::uint64_t i = begin; i < end; ++i) {
        if ((i & 1023) == 0) limits.check_deadline();
        decode(i, x);
        if (contains_dilate(polytope, to_rational(x), scale)) {
          ++counts[w];
          if (collect) found[w].push_back(x);
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  LatticePointCount result;
  result.candidates = total;
  for (unsigned w = 0; w < workers; ++w) {
    result.count += counts[w];
    if (collect) result.points.insert(result.points.end(), found[w].begin(), found[w].end());
  }
  return result;
}

LatticePolytope apply_affine_map(const AffineMap& map, const LatticePolytope& polytope) {
  if (map.source_dim() != polytope.ambient_dim()) throw std::invalid_argument("apply_affine_map: dimension mismatch");
  if (map.translation.size() != map.target_dim()) throw std::invalid_argument("apply_affine_map: malformed map");
  std::vector<IntVector> images;
  images.reserve(polytope.num_vertices());
  for (const auto& v : polytope.vertices()) images.push_back(map.apply(v));
  return LatticePolytope(map.target_dim(), std::move(images));
}

bool equal_vertex_sets(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("equal_vertex_sets: dimension mismatch");
  return a.vertices() == b.vertices();
}

}  // namespace matchfield
