#include <doctest.h>

#include "matchfield/errors.hpp"
#include "matchfield/pluecker.hpp"
#include "oracles.hpp"

using namespace matchfield;

TEST_CASE("initial terms") {
  const WeightMatrix md = diagonal_weight_matrix(2, 4);
  const InitialTerm t = initial_term(md, {1, 2});
  CHECK(t.assignment == Tuple{1, 2});
  CHECK(t.weight == 2);
  CHECK(t.sign == 1);
  for (const auto& s : k_subsets(6, 3)) {
    const InitialTerm d = initial_term(diagonal_weight_matrix(3, 6), s);
    CHECK(d.assignment == s);
    CHECK(d.sign == 1);
  }
  const WeightMatrix ff = fflv_weight_matrix(3, 7);
  const InitialTerm f = initial_term(ff, {1, 3, 6});
  CHECK(f.assignment == *oracle::min_permutation(ff, {1, 3, 6}));
  CHECK(f.assignment[0] == 1);
  CHECK(f.assignment[2] == 3);
  CHECK(f.sign == oracle::permutation_sign(f.assignment));
  CHECK_THROWS_AS(initial_term(WeightMatrix::from_integers({{0, 0, 0}, {0, 0, 0}}), {1, 2}), NonGenericError);
}

TEST_CASE("initial terms agree with induced fields") {
  for (auto [k, n] : {std::pair{3, 6}, {2, 5}}) {
    for (const auto& m : weight_sequence(k, n)) {
      const MatchingField f = induce_field(m);
      const InducedWeight w = induced_weight(m);
      for (const auto& s : f.subsets()) {
        const InitialTerm t = initial_term(m, s);
        CHECK(t.assignment == f.tuple(s));
        CHECK(t.weight == w[s]);
        CHECK(t.sign == oracle::permutation_sign(t.assignment));
        CHECK(w[s] == oracle::min_weight(m, s));
      }
    }
  }
}

TEST_CASE("induced weights") {
  const InducedWeight w = induced_weight(diagonal_weight_matrix(2, 4));
  CHECK(w.values == RationalVector{2, 1, 0, 1, 0, 0});
  const InducedWeight z = induced_weight(WeightMatrix::from_integers({{0, 0, 0, 0}, {0, 0, 0, 0}}));
  for (const auto& v : z.values) CHECK(v == 0);
  RationalMatrix shifted = diagonal_weight_matrix(3, 6).entries();
  for (auto& x : shifted[1]) x += Rational(5, 3);
  const InducedWeight a = induced_weight(diagonal_weight_matrix(3, 6));
  const InducedWeight b = induced_weight(WeightMatrix(shifted));
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b.values[i] == a.values[i] + Rational(5, 3));
}

TEST_CASE("Grassmann-Pluecker relations") {
  const auto r24 = gp_relations(2, 4);
  REQUIRE(r24.size() == 1);
  CHECK(r24[0].to_string() == "P12*P34 - P13*P24 + P14*P23");
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    const auto rels = gp_relations(k, n);
    CHECK_FALSE(rels.empty());
    const GpCheck c = check_gp_relations(rels, k, n, 0, 5);
    CHECK(c.failures == 0);
    CHECK(c.matrices == 5);
    for (const auto& r : rels) {
      CHECK(r.terms.front().coefficient > 0);
      for (const auto& t : r.terms) CHECK(t.first <= t.second);
    }
  }
  // Exact minors against the Leibniz expansion.
  const RationalMatrix x = random_rational_matrix(3, 6, 42);
  for (const auto& rel : gp_relations(3, 6)) {
    Rational total = 0;
    for (const auto& t : rel.terms) {
      auto minor = [&](const Subset& s) {
        std::vector<std::vector<Rational>> sub(3, std::vector<Rational>(3));
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) sub[r][c] = x[r][s[c] - 1];
        return oracle::leibniz_det(sub);
      };
      total += Rational(t.coefficient) * minor(t.first) * minor(t.second);
    }
    CHECK(total == 0);
    CHECK(evaluate_relation(rel, x) == 0);
  }
  // A relation that is not an identity is caught.
  PlueckerRelation bogus;
  bogus.terms.push_back({1, {1, 2}, {3, 4}});
  CHECK(check_gp_relations({bogus}, 2, 4, 0, 3).failures > 0);
  CHECK_THROWS_AS(gp_relations(1, 3), std::invalid_argument);
}

TEST_CASE("initial forms") {
  const auto rel = gp_relations(2, 4).front();
  const InitialForm f = initial_form(rel, induced_weight(diagonal_weight_matrix(2, 4)));
  CHECK(f.binomial);
  CHECK(f.weight == 1);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0] == PlueckerTerm{-1, {1, 3}, {2, 4}});
  CHECK(f.terms[1] == PlueckerTerm{1, {1, 4}, {2, 3}});
  const InitialForm whole = initial_form(rel, induced_weight(WeightMatrix::from_integers({{0, 0, 0, 0}, {0, 0, 0, 0}})));
  CHECK(whole.terms == rel.terms);
  CHECK_FALSE(whole.binomial);
  const auto seq = weight_sequence(2, 4);
  CHECK(initial_form(rel, induced_weight(seq.back())).binomial);
  for (int n = 4; n <= 6; ++n)
    for (const auto& r : gp_relations(2, n))
      if (r.terms.size() == 3) CHECK(initial_form(r, induced_weight(diagonal_weight_matrix(2, n))).binomial);
}
