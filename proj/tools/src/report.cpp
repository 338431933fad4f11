#include "va_cli/report.hpp"

#include "va/parse.hpp"

namespace va::cli {

std::string render_linear_form(const VectorQ& a) { return render_poly(linear_form(a)); }

Json certificate_json(const VACertificate& cert, bool include_timings) {
  Json j;
  j["n"] = cert.n;
  j["d"] = cert.d;
  j["T"] = cert.T;
  j["reduced_scope"] = cert.smooth ? "smooth" : "isolated_singularities";
  j["condition_I"] = {{"dim", cert.condition_I.dim_M_T_minus_1}, {"holds", cert.condition_I.holds}};
  const auto& c2 = cert.condition_II;
  Json c2j;
  c2j["evaluated"] = c2.evaluated;
  c2j["empty"] = c2.evaluated ? Json(c2.empty) : Json(nullptr);
  c2j["witness"] = c2.witness ? Json(render_linear_form(*c2.witness)) : Json(nullptr);
  c2j["certificate_size"] = c2.certificate ? c2.certificate->size() : 0;
  j["condition_II"] = std::move(c2j);
  j["verdict"] = cert.verdict;
  if (cert.lefschetz) {
    const auto& l = *cert.lefschetz;
    j["lefschetz"] = {{"seed", l.seed},
                      {"trials", l.trials},
                      {"success", l.success},
                      {"witness", l.witness ? Json(render_linear_form(*l.witness)) : Json(nullptr)}};
  } else {
    j["lefschetz"] = nullptr;
  }
  Json checks = Json::array();
  for (const auto& c : cert.cross_checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["cross_checks"] = std::move(checks);
  Json timings = Json::object();
  if (include_timings)
    for (const auto& [k, v] : cert.timings_ms) timings[k] = v;
  j["timings_ms"] = std::move(timings);
  return j;
}

void print_certificate(std::ostream& os, const VACertificate& cert) {
  os << "n = " << cert.n << ", d = " << cert.d << ", T = " << cert.T << (cert.smooth ? " (smooth)" : " (singular)")
     << '\n';
  os << "condition I: dim (M_f)_{T-1} = " << cert.condition_I.dim_M_T_minus_1
     << (cert.condition_I.holds ? " (holds)" : " (fails)") << '\n';
  const auto& c2 = cert.condition_II;
  if (!c2.evaluated) {
    os << "condition II: not evaluated\n";
  } else {
    os << "condition II: " << (c2.empty ? "empty" : "nonempty");
    if (c2.witness) os << ", witness " << render_linear_form(*c2.witness);
    if (!c2.note.empty()) os << " (" << c2.note << ')';
    os << '\n';
  }
  if (cert.lefschetz) {
    const auto& l = *cert.lefschetz;
    os << "lefschetz: " << (l.success ? "full rank" : "no full-rank trial") << " after " << l.trials << " trial(s), seed "
       << l.seed;
    if (l.witness) os << ", l = " << render_linear_form(*l.witness);
    os << '\n';
  }
  for (const auto& c : cert.cross_checks) {
    os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  os << "verdict: " << (cert.verdict ? "Veronese-Avoiding" : "not Veronese-Avoiding") << '\n';
}

Json singular_json(const SingularReport& report, const Classification& cls) {
  Json j;
  j["complete"] = report.complete;
  j["total_tjurina"] = report.total_tjurina_local;
  Json pts = Json::array();
  std::vector<ProjPoint> coords;
  for (const auto& p : report.points) {
    pts.push_back({{"point", to_string(p.point)},
                   {"tjurina", p.tjurina},
                   {"milnor", p.milnor},
                   {"node", p.is_node},
                   {"quadratic_rank", p.quadratic_rank}});
    coords.push_back(p.point);
  }
  j["points"] = std::move(pts);
  j["general_position"] = coords.empty() ? Json(nullptr) : Json(general_linear_position(coords).independent);
  Json cases = Json::array();
  for (auto c : cls.applicable) cases.push_back(to_string(c));
  j["cases"] = std::move(cases);
  j["predicted_va"] = cls.predicted_va ? Json(*cls.predicted_va) : Json(nullptr);
  return j;
}

void print_singular(std::ostream& os, const SingularReport& report, const Classification& cls) {
  os << report.points.size() << " rational singular point(s)" << (report.complete ? "" : ", list incomplete") << '\n';
  std::vector<ProjPoint> coords;
  for (const auto& p : report.points) {
    os << "  " << to_string(p.point) << ": tau = " << p.tjurina << ", mu = " << p.milnor
       << ", quadratic rank = " << p.quadratic_rank << (p.is_node ? ", node" : "") << '\n';
    coords.push_back(p.point);
  }
  if (!coords.empty()) {
    const auto pos = general_linear_position(coords);
    os << "general position: " << (pos.independent ? "true" : "false") << " (defect " << pos.defect << ")\n";
  }
  os << "cases:";
  for (auto c : cls.applicable) os << ' ' << to_string(c);
  os << '\n';
  os << "predicted VA: " << (cls.predicted_va ? (*cls.predicted_va ? "true" : "false") : "none");
  if (!cls.note.empty()) os << " (" << cls.note << ')';
  os << '\n';
}

}  // namespace va::cli
