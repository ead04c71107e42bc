#include <doctest.h>

#include "matchfield/linalg.hpp"
#include "matchfield/lp.hpp"
#include "matchfield/rational.hpp"
#include "oracles.hpp"

using namespace matchfield;

TEST_CASE("rational text form is canonical") {
  CHECK(to_string(Rational(6) / -4) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("3/-6"), std::invalid_argument);
  CHECK(Rational(-7, 2) == Rational(-7) / 2);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(is_integral(Rational(3)));
  CHECK_FALSE(is_integral(Rational(1, 3)));
}

TEST_CASE("rank, determinant and solve") {
  RationalMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  CHECK(linalg::determinant(a) == oracle::leibniz_det(a));
  CHECK(linalg::rank(a) == 3);
  RationalMatrix singular{{1, 2}, {2, 4}};
  CHECK(linalg::rank(singular) == 1);
  CHECK(linalg::determinant(singular) == 0);
  CHECK_FALSE(linalg::solve(singular, {1, 1}).has_value());
  auto x = linalg::solve(a, {Rational(1), Rational(2), Rational(3)});
  REQUIRE(x.has_value());
  for (std::size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += a[r][c] * (*x)[c];
    CHECK(s == r + 1);
  }
  CHECK(linalg::affine_dimension({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}) == 1);
  CHECK(linalg::affine_dimension({{1, 1}}) == 0);
}

TEST_CASE("random determinants match the Leibniz expansion") {
  std::uint64_t state = 7;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 11) - 5;
  };
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix m(4, RationalVector(4));
    for (auto& row : m)
      for (auto& v : row) v = Rational(next(), 1 + (next() + 5) % 3);
    CHECK(linalg::determinant(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("simplex solves small problems exactly") {
  SUBCASE("bounded maximum") {
    lp::Problem p;
    p.num_variables = 2;
    p.sense = lp::Sense::Maximize;
    p.objective = {3, 2};
    p.constraints.push_back({{1, 1}, lp::Relation::LessEqual, 4});
    p.constraints.push_back({{1, 3}, lp::Relation::LessEqual, 6});
    p.constraints.push_back({{1, 0}, lp::Relation::LessEqual, Rational(7, 2)});
    auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.objective == Rational(23, 2));
  }
  SUBCASE("infeasible") {
    lp::Problem p;
    p.num_variables = 1;
    p.constraints.push_back({{1}, lp::Relation::GreaterEqual, 2});
    p.constraints.push_back({{1}, lp::Relation::LessEqual, 1});
    CHECK(lp::solve(p).status == lp::Status::Infeasible);
  }
  SUBCASE("unbounded") {
    lp::Problem p;
    p.num_variables = 2;
    p.sense = lp::Sense::Maximize;
    p.objective = {1, 0};
    p.constraints.push_back({{1, -1}, lp::Relation::LessEqual, 1});
    CHECK(lp::solve(p).status == lp::Status::Unbounded);
  }
  SUBCASE("equalities with a redundant row") {
    lp::Problem p;
    p.num_variables = 3;
    p.objective = {1, 1, 1};
    p.constraints.push_back({{1, 1, 0}, lp::Relation::Equal, 1});
    p.constraints.push_back({{2, 2, 0}, lp::Relation::Equal, 2});
    p.constraints.push_back({{0, 1, 1}, lp::Relation::Equal, Rational(1, 2)});
    auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.objective == 1);
  }
}
