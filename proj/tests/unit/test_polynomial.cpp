#include <doctest.h>

#include "../support/generators.hpp"
#include "va/error.hpp"
#include "va/parse.hpp"

using namespace va;

namespace {
Polynomial P(const char* s, std::size_t n) { return parse_poly(s, n); }
}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P("x*y*z + x^3 + y^3", 3), 0) == P("y*z + 3*x^2", 3));
    CHECK(partial_derivative(P("y^4", 3), 0).is_zero());
    for (unsigned d = 4; d <= 7; ++d) {
      const std::string f = "x*y*z^" + std::to_string(d - 2);
      const std::string want = "x*z^" + std::to_string(d - 2);
      CHECK(partial_derivative(P(f.c_str(), 3), 1) == P(want.c_str(), 3));
    }
  }

  TEST_CASE("degree-2 basis order and coefficient vectors") {
    const auto b = graded_basis(3, 2);
    REQUIRE(b.size() == 6);
    const char* names[] = {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"};
    for (std::size_t i = 0; i < 6; ++i) CHECK(render_monomial(b[i], 3) == names[i]);
    CHECK(coefficient_vector(P("3*x^2 + y*z", 3), 2) == VectorQ{3, 0, 0, 0, 1, 0});
    CHECK(coefficient_vector(Polynomial(3), 4) == VectorQ(15));
    CHECK_THROWS_AS(coefficient_vector(P("x^2 + y", 3), 2), PreconditionError);
  }

  TEST_CASE("graded piece dimensions are binomial") {
    for (std::size_t n = 1; n <= 5; ++n)
      for (unsigned m = 0; m <= 10; ++m)
        CHECK(graded_basis(n, m).size() == binomial(static_cast<unsigned>(n) + m - 1, m).get_ui());
  }

  TEST_CASE("Euler relation") {
    testing::Gen g(3);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
      const unsigned d = static_cast<unsigned>(g.integer(1, 6));
      const Polynomial f = g.homogeneous(n, d, 6);
      Polynomial lhs(n);
      for (std::size_t i = 0; i < n; ++i) lhs += Polynomial::variable(n, i) * partial_derivative(f, i);
      CHECK(lhs == f * Rational(d));
    }
  }

  TEST_CASE("ring laws on random polynomials") {
    testing::Gen g(5);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
      const Polynomial a = g.any(n, 3, 4), b = g.any(n, 3, 4), c = g.any(n, 3, 4);
      CHECK(a * b == b * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a - a).is_zero());
      CHECK(a.pow(3) == a * a * a);
      std::vector<Rational> pt;
      for (std::size_t i = 0; i < n; ++i) pt.push_back(g.rational());
      CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
  }

  TEST_CASE("linear substitution") {
    const Polynomial f = P("x*y*z + x^3 + y^3", 3);
    CHECK(substitute_linear(f, MatrixQ::identity(3)) == f);
    MatrixQ swap(2, 2, VectorQ{0, 1, 1, 0});
    CHECK(substitute_linear(P("x^2", 2), swap) == P("y^2", 2));
    CHECK_THROWS_AS(substitute_linear(f, MatrixQ(3, 3)), PreconditionError);

    testing::Gen g(7);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
      const MatrixQ a = g.invertible(n, 2);
      const Polynomial h = g.homogeneous(n, static_cast<unsigned>(g.integer(1, 4)), 5);
      CHECK(substitute_linear(substitute_linear(h, a), inverse(a)) == h);
    }
  }

  TEST_CASE("resultants") {
    const Polynomial t2 = P("x^2 + 3*x + 1", 1), t3 = P("x^3 + 2*x + 2", 1);
    CHECK(resultant_univariate(t2, t3) == -25);
    const Polynomial p = P("x^5 + 15*x^4 - 50*x^3 + 70*x^2 - 95*x + 67", 1);
    const Polynomial q = P("3*x^5 + 5*x^4 + 30*x^3 - 50*x^2 + 35*x - 19", 1);
    CHECK(resultant_univariate(p, q) == Rational(Integer("-112990236800000")));
    CHECK(resultant_univariate(P("x - 7", 1), P("x - 3", 1)) == 4);
    CHECK(resultant_univariate(P("x - 2/3", 1), P("x + 5", 1)) == Rational(17, 3));
    CHECK_THROWS_AS(resultant_univariate(Polynomial(1), t2), PreconditionError);
  }

  TEST_CASE("resultant is multiplicative in the second argument") {
    testing::Gen g(13);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial a = g.any(1, 3, 3, 5), b = g.any(1, 3, 3, 5), c = g.any(1, 2, 3, 5);
      if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
      CHECK(resultant_univariate(a, b * c) == resultant_univariate(a, b) * resultant_univariate(a, c));
    }
  }

  TEST_CASE("Hessian determinants") {
    CHECK(hessian_det(P("x^3 + y^3 + z^3", 3)) == P("216*x*y*z", 3));
    CHECK(hessian_det(P("x^3 + y^3 + z^3 - 6*x*y*z", 3)) ==
          P("-216*x^3 - 216*x*y*z - 216*y^3 - 216*z^3", 3));
    CHECK(hessian_det(P("x^4 + y^4 + z^4", 3)).degree() == 6);
  }

  TEST_CASE("symbolic powers of a linear form") {
    const auto e = power_linear_form_symbolic(2, 2);
    REQUIRE(e.size() == 3);
    CHECK(e[0].multinomial == 1);
    CHECK(e[1].multinomial == 2);
    CHECK(e[2].multinomial == 1);
    CHECK(render_monomial(e[1].x_monomial, 2) == "x*y");

    const VectorQ a{0, 0, 1};
    VectorQ from_symbolic(6);
    for (const auto& t : power_linear_form_symbolic(3, 2)) {
      Rational v = t.multinomial;
      for (std::size_t i = 0; i < 3; ++i)
        for (unsigned k = 0; k < t.x_monomial[i]; ++k) v *= a[i];
      from_symbolic[GradedBasis(3, 2).index_of(t.x_monomial)] = v;
    }
    CHECK(from_symbolic == coefficient_vector(P("z^2", 3), 2));

    testing::Gen g(17);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
      const unsigned m = static_cast<unsigned>(g.integer(1, 5));
      const VectorQ c = g.vector(n);
      CHECK(linear_form_power(c, m) == linear_form(c).pow(m));
    }
  }

  TEST_CASE("primitive normalization") {
    const Polynomial p = P("-4/3*x^2 + 2*y^2", 2).primitive();
    CHECK(p == P("2*x^2 - 3*y^2", 2));
  }
}
