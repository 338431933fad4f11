#include "va_cli/corpus.hpp"

#include <atomic>
#include <chrono>
#include <charconv>
#include <sstream>
#include <thread>

#include "va/apolar.hpp"
#include "va/error.hpp"
#include "va/parse.hpp"
#include "va/singlocus.hpp"

namespace va::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw Error("corpus line " + std::to_string(line) + ": " + what);
}

template <class T>
T to_number(std::string_view v, std::size_t line) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) bad(line, "expected a number, got '" + std::string(v) + "'");
  return out;
}

bool to_bool(std::string_view v, std::size_t line) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad(line, "expected true or false, got '" + std::string(v) + "'");
}

void assign(CorpusEntry& e, std::string_view key, std::string_view v, std::size_t line) {
  if (key == "name") e.name = v;
  else if (key == "n") e.n = to_number<std::size_t>(v, line);
  else if (key == "d") e.d = to_number<unsigned>(v, line);
  else if (key == "poly") e.poly = v;
  else if (key == "verdict") e.verdict = to_bool(v, line);
  else if (key == "condition_I") e.condition_I = to_number<long>(v, line);
  else if (key == "condition_II") {
    if (v != "empty" && v != "nonempty") bad(line, "condition_II must be empty or nonempty");
    e.condition_II_empty = v == "empty";
  } else if (key == "witness") e.witness = v;
  else if (key == "inverse_system") e.inverse_system = v;
  else if (key == "singular_points") e.singular_points = to_number<std::size_t>(v, line);
  else if (key == "nodes") e.nodes = to_number<std::size_t>(v, line);
  else if (key == "general_position") e.general_position = to_bool(v, line);
  else if (key == "predicted") {
    if (v != "true" && v != "false" && v != "none") bad(line, "predicted must be true, false or none");
    e.predicted = v;
  } else if (key == "scope_error") e.scope_error = v;
  else if (key == "provenance") {
    if (v != "reported" && v != "derived" && v != "identity")
      bad(line, "provenance must be reported, derived or identity");
    e.provenance = v;
  } else if (key == "source") e.source = v;
  else bad(line, "unknown key '" + std::string(key) + "'");
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::optional<CorpusEntry> cur;
  auto flush = [&] {
    if (!cur) return;
    if (cur->name.empty() || cur->n == 0 || cur->poly.empty()) bad(cur->line, "record needs name, n and poly");
    if (cur->provenance.empty()) bad(cur->line, "record needs a provenance");
    out.push_back(std::move(*cur));
    cur.reset();
  };
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      flush();
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) bad(lineno, "expected 'key: value'");
    if (!cur) {
      cur.emplace();
      cur->line = lineno;
    }
    assign(*cur, trim(line.substr(0, colon)), trim(line.substr(colon + 1)), lineno);
  }
  flush();
  return out;
}

std::vector<CorpusEntry> builtin_corpus() { return parse_corpus(builtin_corpus_text()); }

namespace {

template <class T>
void expect(EntryResult& r, const char* what, const std::optional<T>& want, const T& got) {
  if (want && *want != got) {
    std::ostringstream os;
    os << std::boolalpha << what << ": expected " << *want << ", got " << got;
    r.diffs.push_back(os.str());
  }
}

void expect_flag(EntryResult& r, const char* what, bool ok) {
  if (!ok) r.diffs.push_back(what);
}

bool same_projective(const VectorQ& a, const VectorQ& b) {
  return normalize_projective(a) == normalize_projective(b);
}

VectorQ linear_coeffs(const Polynomial& l) {
  if (l.degree() != 1 || !l.is_homogeneous()) throw Error("expected a linear form");
  VectorQ a(l.nvars());
  for (const auto& t : l.terms())
    for (std::size_t i = 0; i < l.nvars(); ++i)
      if (t.mono[i]) a[i] = t.coeff;
  return a;
}

void check_entry(const CorpusEntry& e, const CheckOptions& options, EntryResult& r) {
  const Polynomial f = parse_poly(e.poly, e.n);
  if (e.d) expect(r, "degree", std::optional<long>(*e.d), static_cast<long>(f.degree()));
  const JacobianAnalysis a(f, options.groebner);
  const VACertificate cert = check_va(a, options);

  expect(r, "verdict", e.verdict, cert.verdict);
  expect(r, "condition_I", e.condition_I, cert.condition_I.dim_M_T_minus_1);
  if (e.condition_II_empty) {
    if (!cert.condition_II.evaluated) r.diffs.push_back("condition_II: not evaluated");
    else expect(r, "condition_II empty", e.condition_II_empty, cert.condition_II.empty);
  }
  if (e.witness) {
    const VectorQ want = linear_coeffs(parse_poly(*e.witness, e.n));
    if (!cert.condition_II.witness) r.diffs.push_back("witness: expected " + *e.witness + ", got none");
    else if (!same_projective(want, *cert.condition_II.witness))
      r.diffs.push_back("witness: expected " + *e.witness + ", got " + render_poly(linear_form(*cert.condition_II.witness)));
  }
  for (const auto& c : cert.cross_checks)
    if (!c.pass) r.diffs.push_back("cross-check " + c.name + " failed" + (c.detail.empty() ? "" : ": " + c.detail));
  if (cert.verdict) {
    expect_flag(r, "lefschetz: no full-rank trial", !cert.lefschetz || cert.lefschetz->success);
  }

  if (a.smooth()) {
    const InverseSystem inv = inverse_system(a);
    if (e.inverse_system) {
      const Polynomial want = parse_poly(PolySource{*e.inverse_system, e.n, 'y'}).primitive();
      if (!(want == inv.F))
        r.diffs.push_back("inverse_system: expected " + render_poly(want, VariableStyle::Indexed, 'y') + ", got " +
                          render_poly(inv.F, VariableStyle::Indexed, 'y'));
    }
    expect_flag(r, "inverse-system criterion disagrees with the verdict",
                smoothness(inv.F, a.config()) == cert.verdict);
    expect_flag(r, "Hessian is zero in the socle", hessian_socle_check(a));
    if (e.singular_points) expect(r, "singular_points", e.singular_points, std::size_t{0});
    return;
  }

  if (e.inverse_system) r.diffs.push_back("inverse_system: input is singular");
  const SingularReport rep = singular_report(a);
  const Classification cls = classify(a, rep);
  std::size_t nodes = 0;
  std::vector<ProjPoint> pts;
  for (const auto& p : rep.points) {
    nodes += p.is_node ? 1 : 0;
    pts.push_back(p.point);
    expect_flag(r, "node test disagrees with quadratic rank",
                p.is_node == (p.quadratic_rank + 1 == a.n()));
    expect_flag(r, "tjurina exceeds milnor", p.tjurina <= p.milnor);
  }
  expect(r, "singular_points", e.singular_points, rep.points.size());
  expect(r, "nodes", e.nodes, nodes);
  if (e.general_position && !pts.empty())
    expect(r, "general_position", e.general_position, general_linear_position(pts).independent);
  if (rep.complete)
    expect_flag(r, "local Tjurina numbers do not add up to the global one",
                rep.total_tjurina_local == tjurina_total(a));
  const std::string predicted = cls.predicted_va ? (*cls.predicted_va ? "true" : "false") : "none";
  expect(r, "predicted", e.predicted, predicted);
  if (cls.predicted_va) expect_flag(r, "classification disagrees with the verdict", *cls.predicted_va == cert.verdict);
}

}  // namespace

EntryResult run_entry(const CorpusEntry& e, const CheckOptions& options) {
  EntryResult r;
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    check_entry(e, options, r);
    if (e.scope_error) r.diffs.push_back("scope_error: expected " + *e.scope_error + ", got none");
  } catch (const ScopeError& err) {
    const std::string kind = to_string(err.kind());
    if (!e.scope_error) r.diffs.push_back(std::string("unexpected scope error: ") + err.what());
    else if (*e.scope_error != kind) r.diffs.push_back("scope_error: expected " + *e.scope_error + ", got " + kind);
  } catch (const std::exception& err) {
    r.diffs.push_back(std::string("error: ") + err.what());
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.diffs.empty();
  return r;
}

std::vector<EntryResult> run_corpus(const std::vector<CorpusEntry>& entries, const CheckOptions& options,
                                    std::size_t jobs) {
  std::vector<EntryResult> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) out[i] = run_entry(entries[i], options);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, entries.size()));
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  return out;
}

}  // namespace va::cli
