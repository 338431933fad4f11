// Acceptance driver: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "va/apolar.hpp"
#include "va/error.hpp"
#include "va/parse.hpp"
#include "va/singlocus.hpp"
#include "va/veronese.hpp"
#include "va_cli/corpus.hpp"

using namespace va;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Outcome {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      failures_.push_back(what);
    }
  }
  /// Runs `body`, then requires it to finish within `limit` seconds.
  void timed(const std::string& label, double limit, const std::function<void()>& body) {
    const auto t0 = Clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      require(false, label + " threw: " + e.what());
    }
    const double s = seconds_since(t0);
    require(s < limit, label + " took " + std::to_string(s) + " s (limit " + std::to_string(limit) + " s)");
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return ok_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double total_limit;
  std::function<void(Outcome&)> run;
};

Polynomial P(const std::string& s, std::size_t n = 3) { return parse_poly(s, n); }

CheckOptions options() {
  CheckOptions o;
  o.seed = 20240601;
  return o;
}

bool proportional(const Polynomial& a, const Polynomial& b) { return a.primitive() == b.primitive(); }

std::string family(unsigned d, bool with_node_term) {
  std::string s = "x*y*z^" + std::to_string(d - 2) + " + x^" + std::to_string(d) + " + y^" + std::to_string(d);
  if (with_node_term) s += " + x^" + std::to_string(d - 1) + "*z";
  return s;
}

// Forms used by criteria 1-8, with their expected verdicts.
struct Named {
  std::string name;
  Polynomial f;
  bool va;
};

std::vector<Named> criteria_forms() {
  std::vector<Named> v = {
      {"fermat n=3 d=3", P("x^3 + y^3 + z^3"), false},
      {"fermat n=3 d=4", P("x^4 + y^4 + z^4"), false},
      {"fermat n=4 d=3", P("x1^3 + x2^3 + x3^3 + x4^3", 4), false},
      {"f3", P(family(3, false)), true},
  };
  for (unsigned d : {4u, 5u, 6u}) v.push_back({"f" + std::to_string(d), P(family(d, false)), false});
  for (unsigned d : {4u, 5u}) v.push_back({"g" + std::to_string(d), P(family(d, true)), true});
  for (long lambda : {2L, 3L, -1L}) v.push_back({"hesse " + std::to_string(lambda), P("x^3 + y^3 + z^3 - (" + std::to_string(3 * lambda) + ")*x*y*z"), true});
  for (long lambda : {0L, -2L}) v.push_back({"hesse " + std::to_string(lambda), P("x^3 + y^3 + z^3 - (" + std::to_string(3 * lambda) + ")*x*y*z"), false});
  v.push_back({"symmetric quartic", P("x^4 + y^4 + z^4 + 4*x*y*z*(x + y + z)"), true});
  v.push_back({"xyz", P("x*y*z"), true});
  v.push_back({"conic and line", P("z*(x*y - z^2)"), true});
  v.push_back({"cuspidal cubic", P("z*y^2 - x^3"), false});
  v.push_back({"auxiliary n=3 d=4", f0_form(3, 4), true});
  v.push_back({"auxiliary n=4 d=3", f0_form(4, 3), true});
  return v;
}

void fermat(Outcome& o) {
  for (const auto& [s, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"x^3 + y^3 + z^3", 3}, {"x^4 + y^4 + z^4", 3}, {"x1^3 + x2^3 + x3^3 + x4^3", 4}}) {
    o.timed(s, 5, [&] {
      const auto c = check_va(P(s, n), options());
      o.require(c.condition_I.holds && c.condition_I.dim_M_T_minus_1 == static_cast<long>(n), s + ": condition I");
      o.require(c.condition_II.evaluated && !c.condition_II.empty, s + ": condition II nonempty");
      bool coordinate = false;
      if (c.condition_II.witness) {
        int nonzero = 0;
        for (const auto& a : *c.condition_II.witness) nonzero += sgn(a) != 0;
        coordinate = nonzero == 1;
      }
      o.require(coordinate, s + ": coordinate-direction witness");
      o.require(!c.verdict, s + ": verdict false");
      o.require(c.all_cross_checks_pass(), s + ": cross-checks");
    });
  }
}

void cubic_family(Outcome& o) {
  o.timed("f3", 5, [&] {
    const Polynomial f = P(family(3, false));
    const auto c = check_va(f, options());
    o.require(c.condition_I.dim_M_T_minus_1 == 3, "condition I dim 3");
    const auto piece = jacobian_piece(f, 2);
    // z1 = 3 z5, z4 = 3 z3, z6 = 0 on the basis x^2, xy, xz, y^2, yz, z^2.
    const std::vector<VectorQ> relations = {{1, 0, 0, 0, -3, 0}, {0, 0, -3, 1, 0, 0}, {0, 0, 0, 0, 0, 1}};
    bool satisfied = rank(piece.rows) == 3;
    for (std::size_t r = 0; r < piece.rows.rows(); ++r)
      for (const auto& rel : relations) {
        Rational dot = 0;
        for (std::size_t k = 0; k < 6; ++k) dot += piece.rows(r, k) * rel[k];
        satisfied = satisfied && sgn(dot) == 0;
      }
    o.require(satisfied, "row space of (J_f)_2 satisfies the three relations");
    o.require(c.condition_II.empty, "condition II empty");
    o.require(c.verdict, "verdict true");
    o.require(c.all_cross_checks_pass(), "cross-checks");
  });
}

void non_avoiding_family(Outcome& o) {
  for (unsigned d : {4u, 5u, 6u}) {
    o.timed("f" + std::to_string(d), 30, [&] {
      const JacobianAnalysis a(P(family(d, false)));
      const auto c = check_va(a, options());
      o.require(!c.verdict, "f" + std::to_string(d) + ": verdict false");
      const QuotientProjection proj(a.f(), a.T() - 1);
      o.require(proj.power_in_subspace({0, 1, 0}), "f" + std::to_string(d) + ": y^(T-1) in (J_f)_(T-1)");
      o.require(c.condition_II.witness && proj.power_in_subspace(*c.condition_II.witness),
                "f" + std::to_string(d) + ": reported witness verified");
      o.require(c.all_cross_checks_pass(), "f" + std::to_string(d) + ": cross-checks");
    });
  }
}

void one_node_family(Outcome& o) {
  for (unsigned d : {4u, 5u}) {
    const std::string tag = "g" + std::to_string(d);
    o.timed(tag, 60, [&] {
      const JacobianAnalysis a(P(family(d, true)));
      const auto c = check_va(a, options());
      o.require(c.verdict, tag + ": verdict true");
      o.require(c.all_cross_checks_pass(), tag + ": cross-checks");
      const auto r = singular_report(a);
      o.require(r.complete && r.points.size() == 1, tag + ": one singular point");
      if (r.points.size() == 1) {
        o.require(to_string(r.points[0].point) == "[0:0:1]", tag + ": at [0:0:1]");
        o.require(r.points[0].is_node && r.points[0].tjurina == 1, tag + ": node with tau 1");
      }
      const auto b = phi_base_locus(a, {{0, 0, 1}});
      o.require(b.empty, tag + ": base locus empty");
      o.require(b.dim_I1 == 2 && b.dim_N_m == 2 && b.dims_match, tag + ": dims (2, 2)");
    });
  }
}

void hesse(Outcome& o) {
  for (long lambda : {2L, 3L, -1L, 0L, -2L}) {
    const std::string tag = "lambda=" + std::to_string(lambda);
    o.timed(tag, 10, [&] {
      const JacobianAnalysis a(P("x^3 + y^3 + z^3 - (" + std::to_string(3 * lambda) + ")*x*y*z"));
      const auto c = check_va(a, options());
      const bool want = lambda == 2 || lambda == 3 || lambda == -1;
      o.require(c.verdict == want, tag + ": verdict");
      o.require(c.all_cross_checks_pass(), tag + ": cross-checks");
      const auto inv = inverse_system(a);
      o.require(proportional(inv.F, P("(" + std::to_string(lambda) + ")*(x^3 + y^3 + z^3) + 6*x*y*z")),
                tag + ": inverse system");
      o.require(va_via_inverse_system(a) == c.verdict, tag + ": inverse-system criterion agrees");
    });
  }
}

void symmetric_quartic(Outcome& o) {
  o.timed("symmetric quartic", 120, [&] {
    const JacobianAnalysis a(P("x^4 + y^4 + z^4 + 4*x*y*z*(x + y + z)"));
    o.require(a.smooth(), "f smooth");
    const auto inv = inverse_system(a);
    const Polynomial want =
        P("6*(x+y+z)^6 - 30*(x+y+z)^4*(x*y+x*z+y*z) - 180*(x+y+z)^3*x*y*z + 105*(x+y+z)^2*(x*y+x*z+y*z)^2"
          " + 510*(x+y+z)*(x*y+x*z+y*z)*x*y*z - 190*(x*y+x*z+y*z)^3 - 165*(x*y*z)^2");
    o.require(proportional(inv.F, want), "inverse system matches the symmetric form");
    o.require(resultant_univariate(P("x^2 + 3*x + 1", 1), P("x^3 + 2*x + 2", 1)) == -25, "Res = -25");
    o.require(resultant_univariate(P("x^5 + 15*x^4 - 50*x^3 + 70*x^2 - 95*x + 67", 1),
                                   P("3*x^5 + 5*x^4 + 30*x^3 - 50*x^2 + 35*x - 19", 1)) ==
                  Rational(Integer("-112990236800000")),
              "Res = -112990236800000");
    const auto c = check_va(a, options());
    o.require(c.verdict, "verdict true");
    o.require(va_via_inverse_system(a), "V(F) smooth");
    o.require(c.all_cross_checks_pass(), "cross-checks");
  });
}

void nodal_cubics(Outcome& o) {
  o.timed("four plane cubics", 20, [&] {
    const std::vector<std::pair<std::string, bool>> cases = {
        {"x*y*z", true}, {"z*(x*y - z^2)", true}, {"x*y*z + x^3 + y^3", true}, {"z*y^2 - x^3", false}};
    for (const auto& [s, want] : cases) {
      const JacobianAnalysis a(P(s));
      const auto c = check_va(a, options());
      o.require(c.verdict == want, s + ": verdict");
      o.require(c.all_cross_checks_pass(), s + ": cross-checks");
      const auto r = singular_report(a);
      const auto cls = classify(a, r);
      o.require(cls.predicted_va && *cls.predicted_va == c.verdict, s + ": classification agrees");
      if (!want) {
        bool any_non_node = false;
        for (const auto& p : r.points) any_non_node = any_non_node || !p.is_node;
        o.require(r.points.size() == 1 && any_non_node, s + ": singular point is not a node");
      }
    }
  });
}

void auxiliary_forms(Outcome& o) {
  o.timed("auxiliary forms", 120, [&] {
    for (auto [n, d] : std::vector<std::pair<std::size_t, unsigned>>{{3, 3}, {3, 4}, {4, 3}}) {
      const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      const JacobianAnalysis a(f0_form(n, d));
      const auto c = check_va(a, options());
      o.require(c.verdict, tag + ": verdict true");
      o.require(c.all_cross_checks_pass(), tag + ": cross-checks");
      const auto r = singular_report(a);
      bool coordinate_nodes = r.complete && r.points.size() == n;
      std::vector<ProjPoint> pts;
      for (const auto& p : r.points) {
        int nonzero = 0;
        for (const auto& x : p.point.coords()) nonzero += sgn(x) != 0;
        coordinate_nodes = coordinate_nodes && p.is_node && nonzero == 1;
        pts.push_back(p.point);
      }
      o.require(coordinate_nodes, tag + ": n coordinate-point nodes");
      o.require(general_linear_position(pts).independent, tag + ": general linear position");
      const auto cls = classify(a, r);
      o.require(cls.predicted_va && *cls.predicted_va == c.verdict, tag + ": classification agrees");
    }
  });
}

void hilbert_properties(Outcome& o) {
  o.timed("property suite", 60, [&] {
    long literal_disagreements = 0;
    for (const auto& e : cli::builtin_corpus()) {
      if (e.scope_error) continue;
      const JacobianAnalysis a(P(e.poly, e.n));
      const long T = a.T();
      if (a.smooth()) {
        bool match = true;
        for (unsigned i = 0; i <= a.T() + 1; ++i)
          match = match && milnor_hilbert_value(a, i) == smooth_reference_hf(a.n(), a.d(), i);
        o.require(match, e.name + ": smooth Hilbert function profile");
      } else {
        bool dual = true;
        for (long q = 0; q <= T; ++q)
          dual = dual && jacobian_module_dim(a, static_cast<unsigned>(q)) ==
                             jacobian_module_dim(a, static_cast<unsigned>(T - q));
        o.require(dual, e.name + ": self-duality of N(f)");
      }
      const bool cI = condition_I(a.input()).holds;
      const bool def0 = defect1(a) == 0;
      const long ct = coincidence_threshold(a).value;
      o.require(cI == def0 && def0 == (ct >= T - 1), e.name + ": condition I <=> def1 = 0 <=> ct >= T-1");
      if (cI != (ct >= T)) ++literal_disagreements;
    }
    o.note("threshold stated as ct >= T disagrees with condition I on " + std::to_string(literal_disagreements) +
           " entries (singular entries with tau >= 2); the equivalence holds with ct >= T-1");
  });
}

void lefschetz(Outcome& o) {
  o.timed("VA corpus entries", 30, [&] {
    for (const auto& e : cli::builtin_corpus()) {
      if (!e.verdict || !*e.verdict) continue;
      const JacobianAnalysis a(P(e.poly, e.n));
      const auto r = lefschetz_degree_one(a, options().seed, 5);
      o.require(r.success, e.name + ": nonzero determinant within 5 trials");
    }
    const auto xyz = lefschetz_degree_one(JacobianAnalysis(P("x*y*z")), options().seed, 5);
    o.require(xyz.success, "xyz: weak Lefschetz in degree 2");
  });
}

void coordinate_changes(Outcome& o) {
  o.timed("forms of criteria 1-8", 120, [&] {
    testing::Gen g(options().seed);
    for (const auto& [name, f, va] : criteria_forms()) {
      const MatrixQ m = g.invertible(f.nvars(), 3);
      const auto c = check_va(substitute_linear(f, m), options());
      o.require(c.verdict == va, name + ": verdict unchanged");
      o.require(c.all_cross_checks_pass(), name + ": cross-checks after coordinate change");
    }
  });
}

long binomial_long(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void dimension_formulas(Outcome& o) {
  o.timed("stratum dimensions", 1, [&] {
    for (auto [n, d] : std::vector<std::pair<long, unsigned>>{{3, 3}, {3, 4}, {4, 3}, {4, 4}}) {
      const long N = binomial_long(n + d - 1, d) - 1;
      const auto s = stratum_dims(static_cast<std::size_t>(n), d);
      const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      o.require(s.N_d == N, tag + ": N_d");
      o.require(s.nodal_dim == N - n, tag + ": N_d - n");
      o.require(s.linear_system_dim == N - n * n, tag + ": N_d - n^2");
    }
  });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fermat hypersurfaces fail condition II", 15, fermat},
      {2, "cubic family member f3 is Veronese-avoiding", 5, cubic_family},
      {3, "family f_d fails for d = 4, 5, 6 with witness y", 90, non_avoiding_family},
      {4, "one-node family g_d is Veronese-avoiding", 120, one_node_family},
      {5, "Hesse pencil verdicts and inverse systems", 50, hesse},
      {6, "symmetric quartic via its inverse system", 120, symmetric_quartic},
      {7, "nodal and cuspidal plane cubics", 20, nodal_cubics},
      {8, "auxiliary nodal forms", 120, auxiliary_forms},
      {9, "Hilbert function, self-duality and threshold equivalence", 60, hilbert_properties},
      {10, "degree-one Lefschetz determinants", 30, lefschetz},
      {11, "verdicts invariant under coordinate changes", 120, coordinate_changes},
      {12, "stratum dimension formulas", 1, dimension_formulas},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    c.run(o);
    const double s = seconds_since(t0);
    o.require(s < c.total_limit, "total time " + std::to_string(s) + " s exceeds " + std::to_string(c.total_limit) + " s");
    std::printf("[%s] %2d %s (%.3f s)\n", o.ok() ? "PASS" : "FAIL", c.id, c.title.c_str(), s);
    for (const auto& f : o.failures()) std::printf("       failed: %s\n", f.c_str());
    for (const auto& n : o.notes()) std::printf("       note: %s\n", n.c_str());
    failed += !o.ok();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
