#include <doctest.h>

#include <algorithm>

#include "../support/generators.hpp"
#include "va/error.hpp"
#include "va/parse.hpp"
#include "va/singlocus.hpp"
#include "va/veronese.hpp"

using namespace va;

namespace {

Polynomial P(const char* s, std::size_t n = 3) { return parse_poly(s, n); }

bool has_case(const Classification& c, ClassificationCase k) {
  return std::find(c.applicable.begin(), c.applicable.end(), k) != c.applicable.end();
}

}  // namespace

TEST_SUITE("singlocus") {
  TEST_CASE("projective points are normalized") {
    const ProjPoint p({2, 4, -2});
    CHECK(p.coords() == VectorQ{-1, -2, 1});
    CHECK(p.chart() == 2);
    CHECK(to_string(ProjPoint({3, 0, 0})) == "[1:0:0]");
    CHECK(to_string(ProjPoint({1, 2, 4})) == "[1/4:1/2:1]");
    CHECK(ProjPoint({1, 1, 0}) == ProjPoint({5, 5, 0}));
    CHECK_THROWS_AS(ProjPoint({0, 0, 0}), PreconditionError);
  }

  TEST_CASE("local invariants") {
    const auto node = local_invariants(P("x*y*z^2 + x^4 + y^4 + x^3*z"), ProjPoint({0, 0, 1}));
    CHECK(node.tjurina == 1);
    CHECK(node.milnor == 1);
    CHECK(node.is_node);
    CHECK(node.quadratic_rank == 2);

    const auto cusp = local_invariants(P("z*y^2 - x^3"), ProjPoint({0, 0, 1}));
    CHECK(cusp.tjurina == 2);
    CHECK(cusp.milnor == 2);
    CHECK_FALSE(cusp.is_node);
    CHECK(cusp.quadratic_rank == 1);

    const auto triple = local_invariants(P("x^3 + y^3"), ProjPoint({0, 0, 1}));
    CHECK(triple.tjurina == 4);
    CHECK(triple.milnor == 4);
    CHECK(triple.quadratic_rank == 0);

    // Non-quasihomogeneous germ: tau < mu. x^4 + y^5 + x^2 y^3 has mu = 12, tau = 11.
    const auto germ = local_invariants(P("x^4*z^4 + y^5*z^3 + x^2*y^3*z^3"), ProjPoint({0, 0, 1}));
    CHECK(germ.milnor == 12);
    CHECK(germ.tjurina == 11);

    CHECK_THROWS_AS(local_invariants(P("x*y*z"), ProjPoint({1, 1, 1})), PreconditionError);
  }

  TEST_CASE("singular reports") {
    const JacobianAnalysis xyz(P("x*y*z"));
    const auto r = singular_report(xyz);
    CHECK(r.complete);
    REQUIRE(r.points.size() == 3);
    for (const auto& s : r.points) CHECK(s.is_node);
    CHECK(r.total_tjurina_local == tjurina_total(xyz));

    const JacobianAnalysis conic_line(P("z*(x*y - z^2)"));
    const auto c = singular_report(conic_line);
    REQUIRE(c.points.size() == 2);
    CHECK(c.total_tjurina_local == 2);

    // Nodes at irrational points: the report is incomplete.
    const JacobianAnalysis irr(P("(x^2 - 2*z^2)*y"));
    const auto i = singular_report(irr);
    CHECK_FALSE(i.complete);

    const JacobianAnalysis smooth(P("x^3 + y^3 + z^3"));
    CHECK(singular_report(smooth).points.empty());
    CHECK(singular_report(smooth).complete);
  }

  TEST_CASE("local Tjurina numbers sum to the global one under coordinate changes") {
    testing::Gen g(83);
    for (const char* s : {"x*y*z", "z*(x*y - z^2)", "x*y*z^2 + x^4 + y^4 + x^3*z", "z*y^2 - x^3"}) {
      for (int k = 0; k < 2; ++k) {
        const JacobianAnalysis a(substitute_linear(P(s), g.invertible(3)));
        const auto r = singular_report(a);
        REQUIRE(r.complete);
        CHECK_MESSAGE(r.total_tjurina_local == tjurina_total(a), std::string(s));
        for (const auto& p : r.points) {
          CHECK(p.tjurina <= p.milnor);
          CHECK(p.is_node == (p.quadratic_rank == 2));
        }
      }
    }
  }

  TEST_CASE("general linear position") {
    const auto coord = general_linear_position({ProjPoint({1, 0, 0}), ProjPoint({0, 1, 0}), ProjPoint({0, 0, 1})});
    CHECK(coord.independent);
    CHECK(coord.defect == 0);
    CHECK(coord.rank == 3);
    const auto collinear = general_linear_position({ProjPoint({1, 0, 0}), ProjPoint({0, 1, 0}), ProjPoint({1, 1, 0})});
    CHECK_FALSE(collinear.independent);
    CHECK(collinear.defect == 1);
    CHECK(collinear.rank == 2);
    const auto two = general_linear_position({ProjPoint({1, 0, 0}), ProjPoint({0, 1, 0})});
    CHECK(two.independent);
    CHECK(two.defect == 0);
  }

  TEST_CASE("classification agrees with the direct verdict") {
    CheckOptions o;
    o.seed = 3;
    for (const char* s : {"x*y*z", "z*(x*y - z^2)", "x*y*z + x^3 + y^3", "z*y^2 - x^3",
                          "x*y*z^2 + x^4 + y^4 + x^3*z"}) {
      const JacobianAnalysis a(P(s));
      const auto c = classify(a);
      REQUIRE_MESSAGE(c.predicted_va.has_value(), std::string(s));
      CHECK_MESSAGE(*c.predicted_va == check_va(a, o).verdict, std::string(s));
    }
    const auto cubic = classify(JacobianAnalysis(P("z*y^2 - x^3")));
    CHECK(has_case(cubic, ClassificationCase::PlaneCubic));
    CHECK(*cubic.predicted_va == false);
    const auto smooth = classify(JacobianAnalysis(P("x^3 + y^3 + z^3 - 6*x*y*z")));
    CHECK(has_case(smooth, ClassificationCase::Smooth));
    CHECK_FALSE(smooth.predicted_va);
    CHECK(has_case(classify(JacobianAnalysis(P("x*y*z^2 + x^4 + y^4 + x^3*z"))), ClassificationCase::FewNodes));

    for (auto [n, d] : std::vector<std::pair<std::size_t, unsigned>>{{3, 3}, {3, 4}, {4, 3}}) {
      const JacobianAnalysis a(f0_form(n, d));
      const auto r = singular_report(a);
      REQUIRE(r.points.size() == n);
      for (const auto& p : r.points) {
        CHECK(p.is_node);
        CHECK(std::count_if(p.point.coords().begin(), p.point.coords().end(),
                            [](const Rational& c) { return sgn(c) != 0; }) == 1);
      }
      std::vector<ProjPoint> pts;
      for (const auto& p : r.points) pts.push_back(p.point);
      CHECK(general_linear_position(pts).independent);
      const auto c = classify(a, r);
      CHECK(has_case(c, ClassificationCase::NNodes));
      REQUIRE(c.predicted_va);
      CHECK(*c.predicted_va);
    }

    const auto incomplete = classify(JacobianAnalysis(P("(x^2 - 2*z^2)*y")));
    CHECK(has_case(incomplete, ClassificationCase::Incomplete));
    CHECK_FALSE(incomplete.predicted_va);
    CHECK(std::string(to_string(ClassificationCase::NNodes)) == "n_points_general_position");
  }
}
