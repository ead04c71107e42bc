#include <doctest.h>

#include "matchfield/errors.hpp"
#include "matchfield/matching_field.hpp"
#include "oracles.hpp"

using namespace matchfield;

namespace {

WeightMatrix ints(std::vector<std::vector<long long>> rows) { return WeightMatrix::from_integers(rows); }

MatchingField brute_force_field(const WeightMatrix& m) {
  std::vector<Tuple> tuples;
  for (const auto& s : k_subsets(m.cols(), m.rows())) {
    auto t = oracle::min_permutation(m, s);
    REQUIRE(t.has_value());
    tuples.push_back(*t);
  }
  return MatchingField(m.rows(), m.cols(), tuples);
}

const std::vector<std::pair<int, int>> kChainCases{{2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 7}};

}  // namespace

TEST_CASE("subsets in lexicographic order") {
  const auto s = k_subsets(4, 2);
  CHECK(s == std::vector<Subset>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(subset_rank(s[i], 4) == i);
  CHECK(k_subsets(7, 3).size() == 35);
  CHECK(format_subset({2, 4, 5}) == "(2,4,5)");
}

TEST_CASE("matching field validation") {
  CHECK_NOTHROW(MatchingField(2, 3, {{1, 2}, {3, 2}, {1, 3}}));
  CHECK_THROWS_AS(MatchingField(2, 3, {{1, 2}, {2, 1}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(MatchingField(2, 3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(MatchingField(2, 3, {{1, 1}, {2, 3}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(MatchingField(2, 3, {{1, 4}, {2, 3}, {1, 3}}), std::invalid_argument);
  const MatchingField f(2, 3, {{3, 2}, {1, 2}, {1, 3}});
  CHECK(f.tuple({2, 3}) == Tuple{3, 2});
  CHECK(f.subsets().front() == Subset{1, 2});
}

TEST_CASE("diagonal weight matrix for Gr(3,6)") {
  const WeightMatrix md = diagonal_weight_matrix(3, 6);
  CHECK(md == ints({{0, 0, 0, 0, 0, 0}, {5, 4, 3, 2, 1, 0}, {30, 24, 18, 12, 6, 0}}));
  const MatchingField f = induce_field(md);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.tuples()[i] == f.subsets()[i]);
  CHECK(f == diagonal(3, 6));
  CHECK(diagonal(3, 6).tuple({2, 4, 5}) == Tuple{2, 4, 5});
  CHECK(is_generic(md));
}

TEST_CASE("induce_field agrees with brute-force permutation search") {
  for (auto [k, n] : kChainCases) {
    for (const auto& m : weight_sequence(k, n)) CHECK(induce_field(m) == brute_force_field(m));
    CHECK(induce_field(fflv_weight_matrix(k, n)) == brute_force_field(fflv_weight_matrix(k, n)));
    CHECK(induce_field(block_diagonal_weight_matrix(k, n)) == brute_force_field(block_diagonal_weight_matrix(k, n)));
  }
}

TEST_CASE("ties are reported as non-generic") {
  auto m = ints({{0, 0, 0, 0}, {1, 1, 1, 1}});
  CHECK_FALSE(is_generic(m));
  CHECK_THROWS_AS(induce_field(m), NonGenericError);
  CHECK_FALSE(is_generic(ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})));
  const Assignment a = minimal_assignment(m, {1, 2});
  CHECK_FALSE(a.unique);
  CHECK(a.weight == 1);
}

TEST_CASE("block diagonal field") {
  const MatchingField b = block_diagonal(3, 6);
  CHECK(b.tuple({1, 3, 5}) == Tuple{3, 1, 5});
  CHECK(b.tuple({2, 4, 6}) == Tuple{2, 4, 6});
  CHECK(block_diagonal_weight_matrix(3, 6) ==
        ints({{0, 0, 0, 0, 0, 0}, {0, 5, 4, 3, 2, 1}, {30, 24, 18, 12, 6, 0}}));
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k < n; ++k) CHECK(induce_field(block_diagonal_weight_matrix(k, n)) == block_diagonal(k, n));
}

TEST_CASE("FFLV weight matrix and field for Gr(3,7) with N = 20") {
  const WeightMatrix m = fflv_weight_matrix(3, 7, Rational(20));
  CHECK(m == ints({{-20, 0, 0, 0, 0, 0, 0}, {7, -14, 5, 4, 3, 2, 1}, {14, 12, -10, 8, 6, 4, 2}}));
  CHECK(is_generic(m));
  CHECK(diag_matrix(3, 7) == ints({{0, 0, 0, 0, 0, 0, 0}, {7, 6, 5, 4, 3, 2, 1}, {14, 12, 10, 8, 6, 4, 2}}));
  const MatchingField f = induce_field(m);
  CHECK(f.tuple({1, 3, 6}) == Tuple{1, 6, 3});
  CHECK(f.tuple({4, 5, 6}) == Tuple{4, 5, 6});
  CHECK(f.tuple({2, 5, 7}) == Tuple{5, 2, 7});
  CHECK(f == fflv(3, 7));
}

TEST_CASE("FFLV defaults and the genericity check on N") {
  const WeightMatrix m = fflv_weight_matrix(2, 4);
  CHECK(m(1, 1) == -64);
  CHECK(m(2, 2) == 3 - 64);
  CHECK(m(2, 1) == 4);
  CHECK(m(2, 4) == 1);
  for (int j = 2; j <= 4; ++j) CHECK(m(1, j) == 0);
  CHECK_THROWS_AS(fflv_weight_matrix(2, 4, Rational(1)), NonGenericError);
  for (auto [k, n] : kChainCases) {
    const MatchingField f = fflv(k, n);
    for (std::size_t r = 0; r < f.size(); ++r) {
      const auto& s = f.subsets()[r];
      const auto& t = f.tuples()[r];
      Tuple rest;
      for (int i = 1; i <= k; ++i) {
        if (std::find(s.begin(), s.end(), i) != s.end()) CHECK(t[i - 1] == i);
        else rest.push_back(t[i - 1]);
      }
      CHECK(std::is_sorted(rest.begin(), rest.end()));
    }
  }
}

TEST_CASE("Diag and M_D induce the same field") {
  for (auto [k, n] : kChainCases) CHECK(induce_field(diag_matrix(k, n)) == diagonal(k, n));
}

TEST_CASE("adding a constant to a row keeps the field") {
  for (auto [k, n] : kChainCases) {
    for (const auto& m : weight_sequence(k, n)) {
      RationalMatrix e = m.entries();
      for (int r = 0; r < k; ++r)
        for (auto& x : e[r]) x += Rational(3 * r - 7, 2);
      CHECK(induce_field(WeightMatrix(e)) == induce_field(m));
    }
  }
}

TEST_CASE("triple sequences") {
  const auto s36 = triple_sequence(3, 6);
  const std::vector<Triple> expected{{4, 3, 6}, {3, 1, 4}, {3, 1, 5}, {3, 1, 6}, {3, 2, 4},
                                     {3, 2, 5}, {3, 2, 6}, {2, 1, 4}, {2, 1, 5}, {2, 1, 6}};
  CHECK(s36.entries == expected);
  CHECK(s36.last_index() == 9);
  CHECK(triple_sequence(2, 4).entries == std::vector<Triple>{{3, 2, 4}, {2, 1, 3}, {2, 1, 4}});
  for (auto [k, n] : kChainCases) {
    const auto s = triple_sequence(k, n);
    CHECK(s.last_index() == oracle::binomial(k, 2) * (n - k));
    CHECK(s.entries.front() == Triple{k + 1, k, n});
    CHECK(s.entries.back() == Triple{2, 1, n});
  }
  CHECK_THROWS_AS(triple_sequence(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(triple_sequence(4, 4), std::invalid_argument);
}

TEST_CASE("weight sequence for Gr(3,6)") {
  const auto m = weight_sequence(3, 6);
  REQUIRE(m.size() == 10);
  CHECK(m[0] == diagonal_weight_matrix(3, 6));
  CHECK(m[1] == ints({{0, 0, 0, 0, 0, 0}, {5, 4, 2, 3, 1, 0}, {30, 24, 18, 12, 6, 0}}));
  CHECK(m[2] == ints({{0, 0, 0, 0, 0, 0}, {5, 4, 1, 3, 2, 0}, {30, 24, 18, 12, 6, 0}}));
  CHECK(m[3] == ints({{0, 0, 0, 0, 0, 0}, {5, 4, 0, 3, 2, 1}, {30, 24, 18, 12, 6, 0}}));
  CHECK(m[4] == ints({{0, 0, 0, 0, 0, 0}, {5, 4, 0, 3, 2, 1}, {30, 24, 12, 18, 6, 0}}));
  CHECK(m[5] == ints({{0, 0, 0, 0, 0, 0}, {5, 4, 0, 3, 2, 1}, {30, 24, 6, 18, 12, 0}}));
  for (const auto& w : m) CHECK(is_generic(w));
}

TEST_CASE("intermediate fields, swap chain and tuple oracle agree") {
  CHECK(intermediate_field(3, 6, 1).tuple({3, 4, 5}) == Tuple{4, 3, 5});
  CHECK(tuple_oracle(3, 6, 1, {3, 4, 5}) == Tuple{4, 3, 5});
  CHECK(swap_step(diagonal(3, 6), {3, 1, 4}).tuple({3, 4, 5}) == Tuple{4, 3, 5});
  CHECK(swap_step(diagonal(3, 6), {3, 1, 4}).tuple({1, 2, 5}) == Tuple{1, 2, 5});
  for (auto [k, n] : kChainCases) {
    const auto seq = triple_sequence(k, n);
    MatchingField chain = diagonal(k, n);
    CHECK(intermediate_field(k, n, 0) == chain);
    for (std::size_t i = 1; i <= seq.last_index(); ++i) {
      chain = swap_step(chain, seq[i]);
      const MatchingField induced = intermediate_field(k, n, i);
      CHECK(induced == chain);
      for (std::size_t r = 0; r < induced.size(); ++r)
        CHECK(tuple_oracle(k, n, i, induced.subsets()[r]) == induced.tuples()[r]);
    }
    CHECK(chain == fflv(k, n));
  }
  CHECK_THROWS_AS(intermediate_field(3, 6, 10), std::out_of_range);
  CHECK_THROWS(tuple_oracle(3, 6, 0, {1, 2, 3}));
  CHECK_THROWS(tuple_oracle(3, 6, 1, {1, 2}));
}

TEST_CASE("coherence by exact LP") {
  const MatchingField cyclic(2, 3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK_FALSE(coherence_check(cyclic).coherent);
  const auto d = coherence_check(diagonal(2, 4));
  REQUIRE(d.coherent);
  REQUIRE(d.witness.has_value());
  CHECK(induce_field(*d.witness) == diagonal(2, 4));
  for (std::size_t i = 0; i <= 9; ++i) {
    const MatchingField f = intermediate_field(3, 6, i);
    const auto r = coherence_check(f);
    REQUIRE(r.coherent);
    CHECK(induce_field(*r.witness) == f);
  }
  const auto b = coherence_check(block_diagonal(3, 5));
  REQUIRE(b.coherent);
  CHECK(induce_field(*b.witness) == block_diagonal(3, 5));
}
