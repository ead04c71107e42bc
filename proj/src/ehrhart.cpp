#include "matchfield/ehrhart.hpp"

#include <sstream>

#include "matchfield/linalg.hpp"

namespace matchfield {

Rational EhrhartPolynomial::operator()(const Rational& t) const {
  Rational value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * t + *it;
  return value;
}

std::string EhrhartPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coefficients[d];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (d == 0 || a != 1) os << matchfield::to_string(a) << (d > 0 ? "*" : "");
    if (d >= 1) os << "t";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return first ? "0" : os.str();
}

EhrhartPolynomial interpolate(const std::vector<std::uint64_t>& values) {
  // Newton forward differences: p(t) = sum_j D^j p(0) * binom(t, j).
  std::vector<Rational> diffs;
  for (auto v : values) diffs.emplace_back(v);
  const std::size_t m = diffs.size();
  std::vector<Rational> leading;
  for (std::size_t j = 0; j < m; ++j) {
    leading.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  EhrhartPolynomial p;
  p.coefficients.assign(std::max<std::size_t>(m, 1), Rational(0));
  RationalVector binom{Rational(1)};  // coefficients of binom(t, j)
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t d = 0; d < binom.size(); ++d) p.coefficients[d] += leading[j] * binom[d];
    // binom(t, j+1) = binom(t, j) * (t - j) / (j + 1)
    RationalVector next(binom.size() + 1, Rational(0));
    for (std::size_t d = 0; d < binom.size(); ++d) {
      next[d + 1] += binom[d];
      next[d] -= binom[d] * static_cast<long>(j);
    }
    for (auto& c : next) c /= static_cast<long>(j + 1);
    binom = std::move(next);
  }
  while (p.coefficients.size() > 1 && p.coefficients.back() == 0) p.coefficients.pop_back();
  return p;
}

EhrhartResult ehrhart(const LatticePolytope& polytope, const ResourceLimits& limits) {
  EhrhartResult r;
  r.dimension = linalg::affine_dimension(polytope.vertices());
  for (std::size_t t = 0; t <= r.dimension; ++t)
    r.counts.push_back(lattice_points(polytope, static_cast<int>(t), limits).count);
  r.polynomial = interpolate(r.counts);
  return r;
}

namespace {

template <typename Counter>
EhrhartResult poset_ehrhart(const GrassmannPoset& poset, Counter count) {
  EhrhartResult r;
  r.dimension = poset.size();  // both poset polytopes are full-dimensional
  for (std::size_t t = 0; t <= r.dimension; ++t) r.counts.push_back(count(poset, static_cast<int>(t)));
  r.polynomial = interpolate(r.counts);
  return r;
}

}  // namespace

EhrhartResult ehrhart_order_polytope(const GrassmannPoset& poset) {
  return poset_ehrhart(poset, order_polytope_lattice_points);
}

EhrhartResult ehrhart_chain_polytope(const GrassmannPoset& poset) {
  return poset_ehrhart(poset, chain_polytope_lattice_points);
}

}  // namespace matchfield
