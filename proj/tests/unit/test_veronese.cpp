#include <doctest.h>

#include "../support/generators.hpp"
#include "va/error.hpp"
#include "va/parse.hpp"
#include "va/veronese.hpp"

using namespace va;

namespace {

Polynomial P(const char* s, std::size_t n = 3) { return parse_poly(s, n); }

CheckOptions seeded(std::uint64_t seed = 7) {
  CheckOptions o;
  o.seed = seed;
  return o;
}

bool proportional(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) return false;
  MatrixQ m(2, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(0, i) = a[i];
    m(1, i) = b[i];
  }
  return rank(m) <= 1 && !is_zero(a) && !is_zero(b);
}

}  // namespace

TEST_SUITE("veronese") {
  TEST_CASE("catalecticant rank detects powers of linear forms") {
    testing::Gen g(61);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
      const unsigned m = static_cast<unsigned>(g.integer(2, 5));
      const VectorQ l = g.nonzero_vector(n, 4);
      const VectorQ v = coefficient_vector(linear_form_power(l, m), m);
      CHECK(catalecticant_rank_at(v, n, m) == 1);
      CHECK(catalecticant(v, n, m).rows() == n);
      CHECK(catalecticant(v, n, m).cols() == graded_basis(n, m - 1).size());
      // The symbolic minors vanish at the point.
      if (graded_basis(n, m).size() <= kMaxVars)
        for (const auto& minor : two_by_two_minors(catalecticant_symbolic(n, m))) CHECK(sgn(minor.evaluate(v)) == 0);
    }
    CHECK(catalecticant_rank_at(coefficient_vector(P("x*y"), 2), 3, 2) == 2);
    CHECK(catalecticant_rank_at(coefficient_vector(P("x^2 + y^2"), 2), 3, 2) == 2);
    CHECK(catalecticant_rank_at(coefficient_vector(P("x^3 + y^3 + z^3"), 3), 3, 3) == 3);
    // Divided-power coordinates of l^2: z_alpha = a^alpha.
    const VectorQ a = {2, -1, 3};
    VectorQ z;
    for (const auto& mono : graded_basis(3, 2)) {
      Rational c = 1;
      for (std::size_t i = 0; i < 3; ++i)
        for (unsigned e = 0; e < mono[i]; ++e) c *= a[i];
      z.push_back(c);
    }
    for (const auto& minor : two_by_two_minors(catalecticant_symbolic(3, 2, CatalecticantConvention::DividedPower)))
      CHECK(sgn(minor.evaluate(z)) == 0);
  }

  TEST_CASE("quotient projection") {
    const QuotientProjection proj(P("x*y*z + x^3 + y^3"), 2);
    CHECK(proj.quotient_dim() == 3);
    CHECK(proj.symbolic_forms().size() == 3);
    CHECK(is_zero(proj.project(P("3*x^2 + y*z"))));
    CHECK_FALSE(is_zero(proj.project(P("x^2"))));
    testing::Gen g(67);
    for (int trial = 0; trial < 20; ++trial) {
      const VectorQ a = g.vector(3, 5);
      const VectorQ direct = proj.project_power(a);
      const auto forms = proj.symbolic_forms();
      for (std::size_t k = 0; k < forms.size(); ++k) CHECK(forms[k].evaluate(a) == direct[k]);
    }
  }

  TEST_CASE("condition II on the cubic family") {
    const JacobianAnalysis a(P("x*y*z + x^3 + y^3"));
    const auto r = condition_II(a);
    CHECK(r.evaluated);
    CHECK(r.empty);
    CHECK_FALSE(r.witness);
    REQUIRE(r.certificate);
    CHECK(projective_empty(*r.certificate));
  }

  TEST_CASE("witnesses are sound and emptiness certificates are checked") {
    for (const char* s : {"x^3 + y^3 + z^3", "x^4 + y^4 + z^4", "x*y*z^2 + x^4 + y^4", "x*y*z^3 + x^5 + y^5",
                          "z*y^2 - x^3", "x^3 + y^3 + z^3 + 6*x*y*z", "x*y*z", "x^3 + y^3 + z^3 - 6*x*y*z",
                          "x*y*z^2 + x^4 + y^4 + x^3*z"}) {
      const JacobianAnalysis a(P(s));
      const auto r = condition_II(a);
      REQUIRE(r.evaluated);
      const QuotientProjection proj(a.f(), a.T() - 1);
      if (r.witness) {
        CHECK_FALSE(r.empty);
        CHECK_MESSAGE(proj.power_in_subspace(*r.witness), std::string(s));
        CHECK(in_row_space(coefficient_vector(linear_form_power(*r.witness, a.T() - 1), a.T() - 1),
                           jacobian_piece(a.f(), a.T() - 1).rows.rows() ? rref(jacobian_piece(a.f(), a.T() - 1).rows)
                                                                        : RrefResult{}));
      }
      if (r.empty) {
        REQUIRE(r.certificate);
        CHECK(projective_empty(*r.certificate));
        // The certificate's ideal contains every quotient form.
        for (const auto& form : proj.symbolic_forms()) CHECK(ideal_contains(*r.certificate, form));
      }
    }
  }

  TEST_CASE("condition II requires condition I") {
    CHECK_THROWS_AS(condition_II(JacobianAnalysis(P("x^3 + y^3"))), PreconditionError);
    const auto cert = check_va(P("x^3 + y^3"), seeded());
    CHECK_FALSE(cert.condition_I.holds);
    CHECK_FALSE(cert.condition_II.evaluated);
    CHECK_FALSE(cert.verdict);
  }

  TEST_CASE("verdicts") {
    struct Case {
      const char* f;
      std::size_t n;
      bool va;
    };
    const Case cases[] = {
        {"x^3 + y^3 + z^3", 3, false},
        {"x*y*z + x^3 + y^3", 3, true},
        {"x*y*z^2 + x^4 + y^4", 3, false},
        {"x*y*z^2 + x^4 + y^4 + x^3*z", 3, true},
        {"x*y*z", 3, true},
        {"z*(x*y - z^2)", 3, true},
        {"z*y^2 - x^3", 3, false},
        {"x^3 + y^3 + z^3 - 6*x*y*z", 3, true},
        {"x^3 + y^3 + z^3 + 6*x*y*z", 3, false},
        {"x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4", 4, true},
    };
    for (const auto& c : cases) {
      const auto cert = check_va(P(c.f, c.n), seeded());
      CHECK_MESSAGE(cert.verdict == c.va, std::string(c.f));
      CHECK_MESSAGE(cert.all_cross_checks_pass(), std::string(c.f));
      CHECK(cert.verdict == (cert.condition_I.holds && cert.condition_II.empty));
      if (cert.verdict) {
        REQUIRE(cert.lefschetz);
        CHECK_MESSAGE(cert.lefschetz->success, std::string(c.f));
      }
    }
  }

  TEST_CASE("Fermat witnesses are coordinate directions") {
    for (const auto& [f, n] : std::vector<std::pair<const char*, std::size_t>>{
             {"x^3 + y^3 + z^3", 3}, {"x^4 + y^4 + z^4", 3}, {"x1^3 + x2^3 + x3^3 + x4^3", 4}}) {
      const auto cert = check_va(P(f, n), seeded());
      CHECK(cert.condition_I.holds);
      CHECK(cert.condition_I.dim_M_T_minus_1 == static_cast<long>(n));
      REQUIRE(cert.condition_II.witness);
      const VectorQ& w = *cert.condition_II.witness;
      CHECK(std::count_if(w.begin(), w.end(), [](const Rational& c) { return sgn(c) != 0; }) == 1);
    }
  }

  TEST_CASE("y is a witness for the non-avoiding family") {
    for (unsigned d : {4u, 5u, 6u}) {
      std::string s = "x*y*z^" + std::to_string(d - 2) + " + x^" + std::to_string(d) + " + y^" + std::to_string(d);
      const JacobianAnalysis a(P(s.c_str()));
      const QuotientProjection proj(a.f(), a.T() - 1);
      CHECK(proj.power_in_subspace({0, 1, 0}));
      CHECK(proj.power_in_subspace({1, 0, 0}));
      CHECK_FALSE(proj.power_in_subspace({0, 0, 1}));
    }
  }

  TEST_CASE("verdict is invariant under coordinate changes") {
    testing::Gen g(71);
    for (const char* s : {"x^3 + y^3 + z^3", "x*y*z + x^3 + y^3", "x*y*z^2 + x^4 + y^4 + x^3*z", "z*y^2 - x^3",
                          "x*y*z^2 + x^4 + y^4", "x^3 + y^3 + z^3 - 6*x*y*z"}) {
      const Polynomial f = P(s);
      const bool base = check_va(f, seeded()).verdict;
      for (int k = 0; k < 2; ++k) {
        const auto moved = check_va(substitute_linear(f, g.invertible(3)), seeded());
        CHECK_MESSAGE(moved.verdict == base, std::string(s));
        CHECK(moved.all_cross_checks_pass());
      }
    }
  }

  TEST_CASE("Lefschetz trials are deterministic") {
    for (unsigned t = 0; t < 10; ++t) {
      const VectorQ a = lefschetz_trial_form(42, t, 4, 3);
      CHECK(a == lefschetz_trial_form(42, t, 4, 3));
      CHECK_FALSE(is_zero(a));
      for (const auto& c : a) CHECK(abs(c) <= 3);
    }
    CHECK(lefschetz_trial_form(1, 0, 6, 50) != lefschetz_trial_form(2, 0, 6, 50));
    const JacobianAnalysis a(P("x*y*z"));
    const auto r1 = lefschetz_degree_one(a, 9), r2 = lefschetz_degree_one(a, 9);
    CHECK(r1.success);
    CHECK(r1.determinants == r2.determinants);
    CHECK(r1.witness == r2.witness);
    // l = x on the Fermat cubic: x^{T-2} x is a power in the Jacobian piece.
    const JacobianAnalysis fermat(P("x^3 + y^3 + z^3"));
    const QuotientProjection proj(fermat.f(), fermat.T() - 1);
    CHECK(lefschetz_determinant(proj, {1, 0, 0}, fermat.T()) == 0);
    CHECK(lefschetz_determinant(proj, {1, 1, 1}, fermat.T()) != 0);
  }

  TEST_CASE("base locus of the power map on the linear forms through the singular points") {
    const JacobianAnalysis g4(P("x*y*z^2 + x^4 + y^4 + x^3*z"));
    const auto b = phi_base_locus(g4, {{0, 0, 1}});
    CHECK(b.dim_I1 == 2);
    CHECK(b.dim_N_m == 2);
    CHECK(b.dims_match);
    CHECK(b.empty);

    const JacobianAnalysis f4(P("x*y*z^2 + x^4 + y^4"));
    const auto c = phi_base_locus(f4, {{0, 0, 1}});
    CHECK_FALSE(c.empty);
    REQUIRE(c.base_points.size() == 2);
    bool has_x = false, has_y = false;
    for (const auto& p : c.base_points) {
      has_x = has_x || proportional(p, {1, 0, 0});
      has_y = has_y || proportional(p, {0, 1, 0});
    }
    CHECK(has_x);
    CHECK(has_y);

    CHECK_THROWS_AS(phi_base_locus(g4, {{0, 0, 1}, {0, 0, 2}}), PreconditionError);
  }

  TEST_CASE("auxiliary nodal forms and dimensions") {
    CHECK(f0_form(3, 3) == P("x*y*z"));
    CHECK(f0_form(3, 4) == P("2*x^2*y^2 + 2*x^2*z^2 + 2*y^2*z^2"));
    CHECK(f0_form(4, 3) == P("x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4", 4));
    CHECK(f0_form(3, 5) == P("x^3*y^2 + x^2*y^3 + x^3*z^2 + x^2*z^3 + y^3*z^2 + y^2*z^3"));
    const std::tuple<std::size_t, unsigned, long> dims[] = {{3, 3, 9}, {3, 4, 14}, {4, 3, 19}, {4, 4, 34}};
    for (auto [n, d, N] : dims) {
      const auto s = stratum_dims(n, d);
      CHECK(s.N_d == N);
      CHECK(s.nodal_dim == N - static_cast<long>(n));
      CHECK(s.linear_system_dim == N - static_cast<long>(n * n));
    }
  }

  TEST_CASE("parameter substitution") {
    MatrixQ b(3, 2);
    b(0, 0) = 1;
    b(1, 1) = 1;
    b(2, 0) = 1;
    b(2, 1) = 1;
    CHECK(substitute_parameters(P("x*z"), b) == P("x^2 + x*y", 2));
  }
}
