#include "matchfield/mutation.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "matchfield/errors.hpp"

namespace matchfield {

MutationData::MutationData(IntVector w, std::vector<IntVector> factor) : w_(std::move(w)), factor_(std::move(factor)) {
  if (w_.empty()) throw std::invalid_argument("MutationData: empty direction");
  if (factor_.empty()) throw std::invalid_argument("MutationData: empty factor");
  int g = 0;
  for (int x : w_) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("MutationData: direction is not primitive");
  for (const auto& f : factor_) {
    if (f.size() != w_.size()) throw std::invalid_argument("MutationData: factor dimension mismatch");
    if (dot(f, w_) != 0) throw std::invalid_argument("MutationData: factor vertex not orthogonal to w");
  }
}

MutationData MutationData::inverse() const {
  IntVector neg(w_.size());
  std::transform(w_.begin(), w_.end(), neg.begin(), [](int x) { return -x; });
  return MutationData(std::move(neg), factor_);
}

Rational min_pairing(const MutationData& data, const RationalVector& x) {
  if (x.size() != data.dim()) throw std::invalid_argument("tropical map: dimension mismatch");
  Rational best = dot(data.factor().front(), x);
  for (const auto& f : data.factor()) best = std::min(best, dot(f, x));
  return best;
}

RationalVector tropical_map(const MutationData& data, const RationalVector& x) {
  const Rational m = min_pairing(data, x);
  RationalVector y = x;
  for (std::size_t c = 0; c < y.size(); ++c) y[c] -= m * data.w()[c];
  return y;
}

IntVector tropical_map(const MutationData& data, const IntVector& x) {
  if (x.size() != data.dim()) throw std::invalid_argument("tropical map: dimension mismatch");
  long long m = dot(data.factor().front(), x);
  for (const auto& f : data.factor()) m = std::min(m, dot(f, x));
  IntVector y = x;
  for (std::size_t c = 0; c < y.size(); ++c) y[c] -= static_cast<int>(m * data.w()[c]);
  return y;
}

std::vector<IntVector> convex_hull_2d(std::vector<IntVector> points) {
  for (const auto& p : points)
    if (p.size() != 2) throw std::invalid_argument("convex_hull_2d: points must be planar");
  std::sort(points.begin(), points.end(), [](const IntVector& a, const IntVector& b) {
    return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  auto cross = [](const IntVector& o, const IntVector& a, const IntVector& b) {
    return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
  };
  // Andrew's monotone chain, sweeping by (y, x).
  std::vector<IntVector> hull(2 * points.size());
  std::size_t h = 0;
  for (const auto& p : points) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], p) <= 0) --h;
    hull[h++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], points[i]) <= 0) --h;
    hull[h++] = points[i];
  }
  hull.resize(h - 1);
  return hull;
}

MappedPolytope map_polytope(const MutationData& data, const LatticePolytope& polytope) {
  MappedPolytope out;
  for (const auto& v : polytope.vertices()) out.images.push_back(tropical_map(data, v));
  std::vector<IntVector> unique_images = out.images;
  std::sort(unique_images.begin(), unique_images.end());
  unique_images.erase(std::unique(unique_images.begin(), unique_images.end()), unique_images.end());
  std::set<IntVector> extreme;
  if (data.dim() == 2) {
    out.vertices = convex_hull_2d(unique_images);
    extreme.insert(out.vertices.begin(), out.vertices.end());
  } else {
    const auto flags = extremal_points(unique_images);
    for (std::size_t i = 0; i < unique_images.size(); ++i)
      if (flags[i]) out.vertices.push_back(unique_images[i]);
    extreme.insert(out.vertices.begin(), out.vertices.end());
  }
  for (const auto& img : out.images) out.extremal.push_back(extreme.count(img) > 0);
  return out;
}

namespace {

std::size_t flat(int n, int row, int col) { return static_cast<std::size_t>(row - 1) * n + (col - 1); }

}  // namespace

IntVector mutation_direction(int k, int n, const Triple& t) {
  IntVector w(static_cast<std::size_t>(k) * n, 0);
  w[flat(n, t.l, t.q)] += 1;
  w[flat(n, t.l + 1, t.p)] += 1;
  w[flat(n, t.l, t.p)] -= 1;
  w[flat(n, t.l + 1, t.q)] -= 1;
  return w;
}

IntVector mutation_factor(int k, int n, const Triple& t) {
  IntVector f(static_cast<std::size_t>(k) * n, 0);
  f[flat(n, t.l, t.p)] = -1;
  for (int c = t.q; c <= n; ++c) f[flat(n, t.l, c)] = -1;
  for (int c = t.q + 1; c <= n; ++c) f[flat(n, t.l + 1, c)] = 1;
  return f;
}

namespace {

const Triple& step_triple(const TripleSequence& seq, std::size_t index) {
  if (index < 1 || index > seq.last_index()) throw std::out_of_range("mutation step index out of range");
  return seq[index];
}

std::vector<VertexValue> classify_field(const MatchingField& field, const Triple& triple, Side side) {
  const IntVector f = mutation_factor(field.k(), field.n(), triple);
  std::vector<VertexValue> out;
  for (std::size_t r = 0; r < field.size(); ++r) {
    VertexValue v;
    v.subset = field.subsets()[r];
    v.tuple = field.tuples()[r];
    v.value = static_cast<int>(dot(f, tuple_vertex(v.tuple, field.n())));
    v.predicate = inner_product_predicate(v.tuple, triple, side);
    if (v.value != v.predicate || v.value < -1 || v.value > 1)
      throw VerificationError("inner product " + std::to_string(v.value) + " disagrees with predicate " +
                              std::to_string(v.predicate) + " on " + format_subset(v.subset));
    out.push_back(std::move(v));
  }
  return out;
}

MutationCertificate certify(const MatchingField& field, const Triple& triple, std::size_t index, Side side) {
  const int n = field.n();
  MutationCertificate cert;
  cert.index = index;
  cert.side = side;
  const auto values = classify_field(field, triple, side);
  std::map<IntVector, Subset> zero_by_vertex;
  std::vector<const VertexValue*> pos, neg;
  for (const auto& v : values) {
    if (v.value == 0) {
      cert.zero.push_back(v.subset);
      zero_by_vertex.emplace(tuple_vertex(v.tuple, n), v.subset);
    } else if (v.value > 0) {
      cert.positive.push_back(v.subset);
      pos.push_back(&v);
    } else {
      cert.negative.push_back(v.subset);
      neg.push_back(&v);
    }
  }
  auto is_zero_vertex = [&](const Tuple& t) -> std::optional<Subset> {
    Subset s = t;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
    auto it = zero_by_vertex.find(tuple_vertex(t, n));
    if (it == zero_by_vertex.end()) return std::nullopt;
    return it->second;
  };
  for (const auto* a : pos) {
    for (const auto* b : neg) {
      PairWitness wit;
      wit.positive = a->subset;
      wit.negative = b->subset;
      IntVector sum = tuple_vertex(a->tuple, n);
      const IntVector vb = tuple_vertex(b->tuple, n);
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += vb[c];

      Tuple first(a->tuple.begin(), a->tuple.begin() + triple.l);
      first.insert(first.end(), b->tuple.begin() + triple.l, b->tuple.end());
      Tuple second(b->tuple.begin(), b->tuple.begin() + triple.l);
      second.insert(second.end(), a->tuple.begin() + triple.l, a->tuple.end());
      wit.constructive_first = first;
      wit.constructive_second = second;
      auto s1 = is_zero_vertex(first);
      auto s2 = is_zero_vertex(second);
      if (s1 && s2) {
        wit.constructive_first = *s1;
        wit.constructive_second = *s2;
        IntVector check = tuple_vertex(first, n);
        const IntVector v2 = tuple_vertex(second, n);
        for (std::size_t c = 0; c < check.size(); ++c) check[c] += v2[c];
        wit.constructive_valid = check == sum;
      }

      for (const auto& v : values) {
        if (v.value != 0) continue;
        IntVector rest = sum;
        const IntVector vz = tuple_vertex(v.tuple, n);
        bool nonneg = true;
        for (std::size_t c = 0; c < rest.size(); ++c) {
          rest[c] -= vz[c];
          if (rest[c] < 0) nonneg = false;
        }
        if (!nonneg) continue;
        auto it = zero_by_vertex.find(rest);
        if (it != zero_by_vertex.end()) {
          wit.search_first = v.subset;
          wit.search_second = it->second;
          break;
        }
      }
      cert.witnesses.push_back(std::move(wit));
    }
  }
  return cert;
}

}  // namespace

MutationData mutation_data(int k, int n, std::size_t index) {
  const auto seq = triple_sequence(k, n);
  const Triple& t = step_triple(seq, index);
  return MutationData(mutation_direction(k, n, t),
                      {IntVector(static_cast<std::size_t>(k) * n, 0), mutation_factor(k, n, t)});
}

std::string to_string(Side side) { return side == Side::Before ? "before" : "after"; }

int inner_product_predicate(const Tuple& tuple, const Triple& t, Side side) {
  const int a = tuple.at(t.l - 1);
  const int b = tuple.at(t.l);
  if (side == Side::Before && a == t.p && b == t.q) return -1;
  if (side == Side::After && a == t.q && b == t.p) return -1;
  if ((t.p < a && a < t.q && t.q < b) || (a < t.p && t.q < b)) return 1;
  return 0;
}

std::vector<VertexValue> classify_vertices(int k, int n, std::size_t index, Side side) {
  const auto seq = triple_sequence(k, n);
  const Triple& t = step_triple(seq, index);
  return classify_field(intermediate_field(k, n, side == Side::Before ? index - 1 : index), t, side);
}

bool MutationCertificate::passed() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const PairWitness& w) { return w.valid(); });
}

MutationCertificate pair_certificate(int k, int n, std::size_t index, Side side) {
  const auto seq = triple_sequence(k, n);
  const Triple& t = step_triple(seq, index);
  return certify(intermediate_field(k, n, side == Side::Before ? index - 1 : index), t, index, side);
}

namespace {

StepReport verify_step_fields(const MatchingField& before, const MatchingField& after, const Triple& triple,
                              std::size_t index) {
  const int k = before.k();
  const int n = before.n();
  StepReport report;
  report.index = index;
  report.triple = triple;
  const MutationData data(mutation_direction(k, n, triple),
                          {IntVector(static_cast<std::size_t>(k) * n, 0), mutation_factor(k, n, triple)});
  const MutationData inverse = data.inverse();
  const MatchingField swapped = swap_step(before, triple);

  std::set<IntVector> images;
  report.matches_swap = true;
  report.inverse_ok = true;
  for (std::size_t r = 0; r < before.size(); ++r) {
    const IntVector v = tuple_vertex(before.tuples()[r], n);
    const IntVector img = tropical_map(data, v);
    images.insert(img);
    if (img != tuple_vertex(swapped.tuples()[r], n)) {
      report.matches_swap = false;
      report.issues.push_back("image of " + format_subset(before.subsets()[r]) + " differs from the swapped tuple");
    }
    if (tropical_map(inverse, img) != v) {
      report.inverse_ok = false;
      report.issues.push_back("inverse map does not recover " + format_subset(before.subsets()[r]));
    }
  }
  std::set<IntVector> target;
  for (const auto& tup : after.tuples()) target.insert(tuple_vertex(tup, n));
  report.bijection = images.size() == before.size() && images == target;
  if (!report.bijection) report.issues.push_back("vertex images are not the vertices of the next polytope");

  try {
    report.before = certify(before, triple, index, Side::Before);
    report.after = certify(after, triple, index, Side::After);
  } catch (const VerificationError& e) {
    report.issues.push_back(e.what());
    report.bijection = false;
  }
  for (const auto* cert : {&report.before, &report.after})
    for (const auto& w : cert->witnesses)
      if (!w.valid())
        report.issues.push_back(to_string(cert->side) + ": no witness for " + format_subset(w.positive) + ", " +
                                format_subset(w.negative));
  return report;
}

}  // namespace

StepReport verify_step(int k, int n, std::size_t index) {
  const auto seq = triple_sequence(k, n);
  const Triple& t = step_triple(seq, index);
  return verify_step_fields(intermediate_field(k, n, index - 1), intermediate_field(k, n, index), t, index);
}

bool ChainReport::passed() const {
  return starts_at_diagonal && ends_at_fflv && counts_constant &&
         std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.passed(); });
}

ChainReport verify_chain(int k, int n, const ChainOptions& options) {
  const auto seq = triple_sequence(k, n);
  const std::size_t last = seq.last_index();
  ChainReport report;
  report.k = k;
  report.n = n;

  std::vector<MatchingField> fields;
  for (std::size_t i = 0; i <= last; ++i) fields.push_back(intermediate_field(k, n, i));
  report.starts_at_diagonal = fields.front() == diagonal(k, n);
  report.ends_at_fflv = fields.back() == fflv(k, n);

  report.steps.resize(last);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.limits.worker_count(), last));
  auto run = [&](unsigned w) {
    for (std::size_t i = 1 + w; i <= last; i += workers) {
      options.limits.check_deadline();
      report.steps[i - 1] = verify_step_fields(fields[i - 1], fields[i], seq[i], i);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run, w));
    for (auto& j : jobs) j.get();
  }

  for (int t = 1; t <= options.ehrhart_depth; ++t) {
    std::vector<std::uint64_t> row;
    for (const auto& f : fields) row.push_back(lattice_points(polytope_of_field(f), t, options.limits).count);
    if (std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) != row.end()) report.counts_constant = false;
    report.counts.push_back(std::move(row));
  }
  return report;
}

}  // namespace matchfield
