#include <doctest.h>

#include "thetapos/linalg.hpp"

using namespace thetapos;

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(rat_str(rat(10, 4)) == "5/2");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("rat_sqrt detects exact squares") {
  CHECK(rat_sqrt(Rat(9, 4)) == Rat(3, 2));
  CHECK(rat_sqrt(Rat(2)) == std::nullopt);
  CHECK(rat_sqrt(Rat(-1)) == std::nullopt);
}

TEST_CASE("matrix inverse and determinant") {
  QMat m(2, 2, {Rat(1), Rat(2), Rat(3), Rat(5)});
  CHECK(det(m) == Rat(-1));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == QMat::identity(2));

  QMat sing(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)});
  CHECK(det(sing) == Rat(0));
  CHECK(!inverse(sing).has_value());
  CHECK(rank(sing) == 1);
}

TEST_CASE("solve and nullspace") {
  QMat a(2, 3, {Rat(1), Rat(0), Rat(1), Rat(0), Rat(1), Rat(1)});
  auto x = solve(a, QVec{Rat(2), Rat(3)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == QVec{Rat(2), Rat(3)});
  auto ker = nullspace(a);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero_vec(a.apply(ker[0])));

  QMat b(2, 1, {Rat(1), Rat(1)});
  CHECK(!solve(b, QVec{Rat(0), Rat(1)}).has_value());
}

TEST_CASE("positive definiteness by leading minors") {
  QMat pd(2, 2, {Rat(2), Rat(-1), Rat(-1), Rat(2)});
  CHECK(is_positive_definite(pd));
  QMat bad(2, 2, {Rat(1), Rat(2), Rat(2), Rat(1)});
  CHECK(!is_positive_definite(bad));
}

TEST_CASE("in_span coordinates") {
  std::vector<QVec> basis{{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
  auto c = in_span(basis, QVec{Rat(2), Rat(3), Rat(5)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(2));
  CHECK((*c)[1] == Rat(3));
  CHECK(!in_span(basis, QVec{Rat(1), Rat(0), Rat(0)}).has_value());
}
