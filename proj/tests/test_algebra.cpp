#include <doctest.h>

#include "coxsig/multipoly.hpp"
#include "coxsig/unipoly.hpp"

using namespace coxsig;

TEST_CASE("quadratic scalars") {
  QuadScalar phi = QuadScalar::phi();
  CHECK(phi * phi == phi + QuadScalar(1));
  CHECK(QuadScalar::sqrt2() * QuadScalar::sqrt2() == QuadScalar(2));
  QuadScalar r2 = QuadScalar::sqrt2();
  CHECK((QuadScalar(1) + r2) * (QuadScalar(1) - r2) == QuadScalar(-1));
  CHECK(phi.inverse() == phi - QuadScalar(1));
  // Irrational parts that cancel normalize back to the rational field.
  QuadScalar x = r2 * r2;
  CHECK(x.is_rational());
  CHECK(x == QuadScalar(2));
  CHECK_THROWS_AS(phi + r2, domain_error);
  CHECK_THROWS_AS(QuadScalar(1) / QuadScalar(0), domain_error);
}

TEST_CASE("matrix determinant, inverse, solve") {
  QMatrix m(2, 2);
  m(0, 0) = QuadScalar(1);
  m(0, 1) = QuadScalar::phi();
  m(1, 0) = QuadScalar(2);
  m(1, 1) = QuadScalar(3);
  QuadScalar d = det(m);
  CHECK(d == QuadScalar(3) - QuadScalar(2) * QuadScalar::phi());
  QMatrix inv = inverse(m);
  CHECK(m * inv == QMatrix::identity(2));
  QMatrix rhs(2, 1);
  rhs(0, 0) = QuadScalar(1);
  rhs(1, 0) = QuadScalar(0);
  QMatrix x = solve(m, rhs);
  CHECK(m * x == rhs);
}

TEST_CASE("characteristic polynomial") {
  // Order-3 rotation: lambda^2 + lambda + 1.
  QMatrix m(2, 2);
  m(0, 1) = QuadScalar(-1);
  m(1, 0) = QuadScalar(1);
  m(1, 1) = QuadScalar(-1);
  UniPoly p = char_poly(m);
  CHECK(p == UniPoly({QuadScalar(1), QuadScalar(1), QuadScalar(1)}));
  CHECK(p.eval(QuadScalar(1)) == QuadScalar(3));
  CHECK(char_poly(QMatrix::identity(3)).eval(QuadScalar(1)) == QuadScalar(0));
}

TEST_CASE("multivariate polynomials") {
  MultiPoly x0 = MultiPoly::variable(2, 0), x1 = MultiPoly::variable(2, 1);
  MultiPoly p = x0 * x0 - x1 * x1;
  SUBCASE("poly_det") {
    Matrix<MultiPoly> m(2, 2);
    m(0, 0) = x0;
    m(0, 1) = x1;
    m(1, 0) = x1;
    m(1, 1) = x0;
    CHECK(poly_det(m) == p);
  }
  SUBCASE("exact division") {
    auto q = p.divide_exact(x0 - x1);
    REQUIRE(q.has_value());
    CHECK(*q == x0 + x1);
    CHECK(!(x0 * x0 + x1).divide_exact(x0 - x1).has_value());
  }
  SUBCASE("graded-lex leading term and substitution") {
    MultiPoly g = x0 + x1 * x1;
    CHECK(g.leading_term().first == Mono{0, 2});
    MultiPoly s = g.substitute({{1, QuadScalar(3)}});
    CHECK(s == x0 + MultiPoly::constant(2, QuadScalar(9)));
    CHECK(g.eval({QuadScalar(5), QuadScalar(2)}) == QuadScalar(9));
  }
  SUBCASE("total degree and homogeneity bookkeeping") {
    CHECK(p.total_degree() == 2);
    CHECK(MultiPoly(2).is_zero());
  }
}
