#include "va/veronese.hpp"

#include <algorithm>

#include "va/error.hpp"

namespace va {

using Clock = std::chrono::steady_clock;

namespace {

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

// --- Catalecticants ---------------------------------------------------------

MatrixQ catalecticant(const VectorQ& v, std::size_t n, unsigned m) {
  if (m < 2) throw PreconditionError("catalecticant: degree must be at least 2");
  const GradedBasis src(n, m), dst(n, m - 1);
  if (v.size() != src.size()) throw PreconditionError("catalecticant: vector length mismatch");
  MatrixQ c(n, dst.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < dst.size(); ++b) {
      Monomial alpha = dst[b];
      alpha.set(i, alpha[i] + 1);
      c(i, b) = v[src.index_of(alpha)] * alpha[i];
    }
  return c;
}

std::size_t catalecticant_rank_at(const VectorQ& v, std::size_t n, unsigned m) { return rank(catalecticant(v, n, m)); }

std::vector<std::vector<Polynomial>> catalecticant_symbolic(std::size_t n, unsigned m,
                                                            CatalecticantConvention convention) {
  if (m < 2) throw PreconditionError("catalecticant_symbolic: degree must be at least 2");
  const GradedBasis src(n, m), dst(n, m - 1);
  const std::size_t z = src.size();
  if (z > kMaxVars) throw PreconditionError("catalecticant_symbolic: too many coordinates for a symbolic ring");
  std::vector<std::vector<Polynomial>> c(n, std::vector<Polynomial>(dst.size(), Polynomial(z)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < dst.size(); ++b) {
      Monomial alpha = dst[b];
      alpha.set(i, alpha[i] + 1);
      const Rational scale = convention == CatalecticantConvention::Derivative ? Rational(alpha[i]) : Rational(1);
      c[i][b] = Polynomial::variable(z, src.index_of(alpha)) * scale;
    }
  return c;
}

std::vector<Polynomial> two_by_two_minors(const std::vector<std::vector<Polynomial>>& m) {
  std::vector<Polynomial> out;
  const std::size_t rows = m.size();
  if (rows == 0) return out;
  const std::size_t cols = m[0].size();
  for (std::size_t r1 = 0; r1 < rows; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < rows; ++r2)
      for (std::size_t c1 = 0; c1 < cols; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < cols; ++c2) {
          Polynomial minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
          if (!minor.is_zero()) out.push_back(std::move(minor));
        }
  return out;
}

// --- Quotient projection ----------------------------------------------------

QuotientProjection::QuotientProjection(const Polynomial& f, unsigned m)
    : n_(f.nvars()), m_(m), basis_(f.nvars(), m), rref_(rref(jacobian_degree_matrix(f, m))) {
  // An empty J-piece still needs the column count for the quotient.
  rref_.cols = basis_.size();
}

VectorQ QuotientProjection::project(const Polynomial& g) const {
  return quotient_coords(coefficient_vector(g, basis_), rref_);
}

VectorQ QuotientProjection::project_power(const VectorQ& a) const {
  if (a.size() != n_) throw PreconditionError("project_power: coefficient count mismatch");
  return project(linear_form_power(a, m_));
}

std::vector<Polynomial> QuotientProjection::symbolic_forms() const {
  const std::size_t q = quotient_dim();
  std::vector<std::vector<Term>> terms(q);
  const auto expansion = power_linear_form_symbolic(n_, m_);
  VectorQ unit(basis_.size());
  for (const auto& pt : expansion) {
    const std::size_t idx = basis_.index_of(pt.x_monomial);
    unit[idx] = 1;
    const VectorQ img = quotient_coords(unit, rref_);
    unit[idx] = 0;
    for (std::size_t j = 0; j < q; ++j)
      if (sgn(img[j]) != 0) terms[j].push_back({pt.x_monomial, img[j] * Rational(pt.multinomial)});
  }
  std::vector<Polynomial> out;
  for (auto& t : terms) out.emplace_back(n_, std::move(t));
  return out;
}

// --- Condition (II) ---------------------------------------------------------

namespace {

// Coordinate directions first, then the remaining {-1,0,1} vectors whose
// first nonzero entry is +1, in base-3 counting order.
std::vector<VectorQ> cheap_candidates(std::size_t n) {
  std::vector<VectorQ> out;
  for (std::size_t i = 0; i < n; ++i) {
    VectorQ e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    VectorQ v(n);
    std::size_t c = code, nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t digit = c % 3;
      c /= 3;
      v[i] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
      if (digit) ++nonzero;
    }
    if (nonzero < 2) continue;
    const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (sgn(*first) < 0) continue;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Polynomial> nonzero(std::vector<Polynomial> v) {
  std::erase_if(v, [](const Polynomial& p) { return p.is_zero(); });
  return v;
}

}  // namespace

namespace {

// Cuts a zero set of projective dimension `dim` with `dim` hyperplanes and
// looks for a rational witness among the finitely many points left. Lex
// elimination on the uncut ideal is far too slow once the zero set is a curve.
std::optional<VectorQ> witness_on_slices(const std::vector<Polynomial>& gens, const QuotientProjection& proj,
                                         std::size_t dim, const GroebnerConfig& config) {
  const std::size_t n = proj.n();
  if (dim + 1 >= n) return std::nullopt;
  constexpr std::uint64_t kSliceSeed = 0x51ce;
  constexpr unsigned kAttempts = 4;
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    MatrixQ hyperplanes(dim, n);
    for (std::size_t j = 0; j < dim; ++j) {
      const VectorQ h = lefschetz_trial_form(kSliceSeed, attempt * static_cast<unsigned>(dim) + static_cast<unsigned>(j), n, 3);
      for (std::size_t k = 0; k < n; ++k) hyperplanes(j, k) = h[k];
    }
    const auto kernel = kernel_basis(hyperplanes);
    if (kernel.size() != n - dim) continue;
    MatrixQ b(n, kernel.size());
    for (std::size_t c = 0; c < kernel.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) b(r, c) = kernel[c][r];
    std::vector<Polynomial> cut;
    for (const auto& g : gens) {
      Polynomial h = substitute_parameters(g, b);
      if (!h.is_zero()) cut.push_back(std::move(h));
    }
    if (cut.empty()) continue;
    const GroebnerBasis gb = buchberger(std::span<const Polynomial>(cut), MonomialOrder::grevlex(), config);
    if (projective_empty(gb) || projective_dimension(gb) != 0) continue;
    for (const auto& p : rational_projective_points(std::span<const Polynomial>(cut), config).points) {
      VectorQ full(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < p.size(); ++c) full[r] += b(r, c) * p[c];
      full = normalize_projective(std::move(full));
      if (proj.power_in_subspace(full)) return full;
    }
  }
  return std::nullopt;
}

}  // namespace

ConditionIIReport condition_II(const JacobianAnalysis& a) {
  if (!condition_I(a.input()).holds)
    throw PreconditionError("condition_II: condition (I) does not hold, the quotient is not n-dimensional");
  ConditionIIReport rep;
  rep.evaluated = true;
  const QuotientProjection proj(a.f(), a.T() - 1);
  rep.forms = proj.symbolic_forms();

  for (const auto& c : cheap_candidates(a.n())) {
    if (proj.power_in_subspace(c)) {
      rep.empty = false;
      rep.witness = c;
      rep.note = "witness found by direct search";
      return rep;
    }
  }

  const auto gens = nonzero(rep.forms);
  if (gens.empty()) {
    rep.empty = false;
    rep.note = "every power of a linear form lies in the Jacobian piece";
    return rep;
  }
  GroebnerBasis gb = buchberger(std::span<const Polynomial>(gens), MonomialOrder::grevlex(), a.config());
  rep.empty = projective_empty(gb);
  rep.certificate = std::move(gb);
  if (rep.empty) {
    rep.note = "ideal of the quotient forms is primary to the irrelevant ideal";
    return rep;
  }
  const int dim = projective_dimension(*rep.certificate);
  if (dim == 0) {
    const RationalPointSet pts = rational_projective_points(std::span<const Polynomial>(gens), a.config());
    for (const auto& p : pts.points)
      if (proj.power_in_subspace(p)) {
        rep.witness = p;
        rep.note = "witness found by elimination";
        return rep;
      }
  } else if (auto w = witness_on_slices(gens, proj, static_cast<std::size_t>(dim), a.config())) {
    rep.witness = std::move(*w);
    rep.note = "witness found by elimination on a linear section";
    return rep;
  }
  rep.note = "nonempty, no rational witness found";
  return rep;
}

// --- Lefschetz --------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

VectorQ lefschetz_trial_form(std::uint64_t seed, unsigned trial, std::size_t n, long bound) {
  if (bound < 1) throw PreconditionError("lefschetz: coefficient bound must be positive");
  std::uint64_t state = seed;
  std::uint64_t mix = trial;
  state ^= splitmix64(mix);
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  for (;;) {
    VectorQ v(n);
    bool any = false;
    for (auto& x : v) {
      x = static_cast<long>(splitmix64(state) % width) - bound;
      any = any || sgn(x) != 0;
    }
    if (any) return v;
  }
}

Rational lefschetz_determinant(const QuotientProjection& proj, const VectorQ& l, unsigned T) {
  const std::size_t n = proj.n();
  if (proj.degree() + 1 != T) throw PreconditionError("lefschetz_determinant: projection degree must be T - 1");
  if (proj.quotient_dim() != n) throw PreconditionError("lefschetz_determinant: quotient is not n-dimensional");
  const Polynomial power = linear_form_power(l, T - 2);
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const VectorQ col = proj.project(power * Polynomial::variable(n, i));
    for (std::size_t r = 0; r < n; ++r) m(r, i) = col[r];
  }
  return determinant(m);
}

LefschetzResult lefschetz_degree_one(const JacobianAnalysis& a, std::uint64_t seed, unsigned trials, long coeff_bound) {
  if (!condition_I(a.input()).holds) throw PreconditionError("lefschetz: condition (I) does not hold");
  LefschetzResult res;
  res.seed = seed;
  res.coeff_bound = coeff_bound;
  const QuotientProjection proj(a.f(), a.T() - 1);
  for (unsigned t = 0; t < trials; ++t) {
    const VectorQ l = lefschetz_trial_form(seed, t, a.n(), coeff_bound);
    Rational det = lefschetz_determinant(proj, l, a.T());
    res.determinants.push_back(det);
    res.trials = t + 1;
    if (sgn(det) != 0) {
      res.success = true;
      res.witness = l;
      break;
    }
  }
  return res;
}

// --- Verdict ----------------------------------------------------------------

bool VACertificate::all_cross_checks_pass() const {
  return std::all_of(cross_checks.begin(), cross_checks.end(), [](const CrossCheck& c) { return c.pass; });
}

VACertificate check_va(const JacobianAnalysis& a, const CheckOptions& options) {
  VACertificate cert;
  cert.n = a.n();
  cert.d = a.d();
  cert.T = a.T();
  cert.smooth = a.smooth();

  auto t0 = Clock::now();
  cert.condition_I = condition_I(a.input());
  cert.timings_ms["condition_I"] = elapsed_ms(t0);

  if (cert.condition_I.holds) {
    t0 = Clock::now();
    cert.condition_II = condition_II(a);
    cert.timings_ms["condition_II"] = elapsed_ms(t0);
  } else {
    cert.condition_II.evaluated = false;
    cert.condition_II.note = "not evaluated: condition (I) fails";
  }
  cert.verdict = cert.condition_I.holds && cert.condition_II.evaluated && cert.condition_II.empty;

  t0 = Clock::now();
  const unsigned T = a.T();
  {
    const long hf = milnor_hilbert_value(a, T - 1);
    const bool ok = cert.condition_I.dim_M_T_minus_1 == hf;
    cert.cross_checks.push_back({"rank_matches_hilbert", ok,
                                 "rank route " + std::to_string(cert.condition_I.dim_M_T_minus_1) +
                                     ", Groebner route " + std::to_string(hf)});
  }
  {
    const long def = defect1(a);
    const CoincidenceThreshold ct = coincidence_threshold(a);
    // Coincidence through degree T - 1 is what matches def_1 = 0; reaching
    // degree T as well needs tau <= 1, since dim (M_f)_T = 1 + tau - 1.
    const long tau = tjurina_total(a);
    const bool b = def == 0, c = ct.value >= static_cast<long>(T) - 1;
    const bool top = (ct.value >= static_cast<long>(T)) == (b && tau <= 1);
    const bool ok = cert.condition_I.holds == b && b == c && top;
    cert.cross_checks.push_back({"lemma_equivalence", ok,
                                 "defect1 " + std::to_string(def) + ", ct " + std::to_string(ct.value) +
                                     (ct.smooth ? " (smooth)" : "")});
  }
  if (a.smooth()) {
    bool ok = true;
    for (unsigned i = 0; i <= T + 1 && ok; ++i) ok = milnor_hilbert_value(a, i) == smooth_reference_hf(a.n(), a.d(), i);
    cert.cross_checks.push_back({"smooth_hilbert_function", ok, ""});
  } else {
    bool ok = true;
    for (unsigned q = 0; q <= T && ok; ++q) ok = jacobian_module_dim(a, q) == jacobian_module_dim(a, T - q);
    cert.cross_checks.push_back({"self_duality", ok, ""});
    const long tau = tjurina_total(a);
    const bool stable = milnor_hilbert_value(a, 3 * T) == tau && milnor_hilbert_value(a, 3 * T + 1) == tau;
    cert.cross_checks.push_back({"milnor_stabilizes_to_tjurina", stable, "tau " + std::to_string(tau)});
  }
  if (cert.condition_II.witness) {
    const QuotientProjection proj(a.f(), T - 1);
    cert.cross_checks.push_back({"witness_verified", proj.power_in_subspace(*cert.condition_II.witness), ""});
  }
  if (cert.condition_II.evaluated && cert.condition_II.empty)
    cert.cross_checks.push_back(
        {"emptiness_certificate",
         cert.condition_II.certificate.has_value() && projective_empty(*cert.condition_II.certificate), ""});
  cert.timings_ms["cross_checks"] = elapsed_ms(t0);

  if (options.lefschetz && cert.condition_I.holds) {
    t0 = Clock::now();
    cert.lefschetz = lefschetz_degree_one(a, options.seed, options.trials, options.coeff_bound);
    cert.timings_ms["lefschetz"] = elapsed_ms(t0);
  }
  return cert;
}

VACertificate check_va(const Polynomial& f, const CheckOptions& options) {
  const auto t0 = Clock::now();
  const JacobianAnalysis a(f, options.groebner);
  const double setup = elapsed_ms(t0);
  VACertificate cert = check_va(a, options);
  cert.timings_ms["jacobian"] = setup;
  return cert;
}

// --- Base locus -------------------------------------------------------------

Polynomial substitute_parameters(const Polynomial& g, const MatrixQ& b) {
  const std::size_t n = g.nvars(), k = b.cols();
  if (b.rows() != n) throw PreconditionError("substitute_parameters: matrix shape mismatch");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial li(k);
    for (std::size_t j = 0; j < k; ++j) li += Polynomial::variable(k, j) * b(i, j);
    images.push_back(std::move(li));
  }
  Polynomial out(k);
  for (const auto& t : g.terms()) {
    Polynomial term(k, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) term = term * images[i].pow(t.mono[i]);
    out += term;
  }
  return out;
}

PhiBaseLocus phi_base_locus(const JacobianAnalysis& a, const std::vector<VectorQ>& points) {
  const std::size_t n = a.n(), r = points.size();
  if (r == 0 || r >= n) throw PreconditionError("phi_base_locus: need 1 <= r < n singular points");
  MatrixQ gamma(0, n);
  for (const auto& p : points) gamma.append_row(p);
  if (rank(gamma) != r) throw PreconditionError("phi_base_locus: points impose dependent linear conditions");

  PhiBaseLocus res;
  res.linear_forms = kernel_basis(gamma);
  const std::size_t k = res.linear_forms.size();
  MatrixQ basis(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = res.linear_forms[j][i];
  res.dim_I1 = static_cast<long>(k);
  res.dim_N_m = jacobian_module_dim(a, a.T() - 1);
  res.dims_match = res.dim_I1 == static_cast<long>(n - r) && res.dim_N_m == static_cast<long>(n - r);

  const QuotientProjection proj(a.f(), a.T() - 1);
  std::vector<Polynomial> restricted;
  for (const auto& g : proj.symbolic_forms()) {
    Polynomial h = substitute_parameters(g, basis);
    if (!h.is_zero()) restricted.push_back(std::move(h));
  }
  auto to_form = [&](const VectorQ& b) { return basis * b; };

  if (restricted.empty()) {
    res.empty = false;
  } else {
    GroebnerBasis gb = buchberger(std::span<const Polynomial>(restricted), MonomialOrder::grevlex(), a.config());
    res.empty = projective_empty(gb);
    res.certificate = std::move(gb);
  }
  if (!res.empty && !restricted.empty()) {
    const RationalPointSet pts = rational_projective_points(std::span<const Polynomial>(restricted), a.config());
    res.base_points_complete = pts.complete && !pts.positive_dimensional;
    for (const auto& b : pts.points) {
      const VectorQ l = to_form(b);
      if (!proj.power_in_subspace(l)) throw DefectError("phi_base_locus: base point fails direct verification");
      res.base_points.push_back(l);
    }
  } else if (res.empty) {
    res.base_points_complete = true;
  }
  if (k == 1) res.hyperplane_power_in_jacobian = proj.power_in_subspace(res.linear_forms.front());
  return res;
}

// --- Auxiliary forms --------------------------------------------------------

Polynomial f0_form(std::size_t n, unsigned d) {
  if (n < 3 || d < 3) throw PreconditionError("f0_form: needs n >= 3 and d >= 3");
  Polynomial f(n);
  auto x = [n](std::size_t i) { return Polynomial::variable(n, i); };
  if (d == 3) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) f += x(i) * x(j) * x(k);
    return f;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) f += x(i).pow(d - 2) * x(j).pow(2) + x(i).pow(2) * x(j).pow(d - 2);
  return f;
}

StratumDims stratum_dims(std::size_t n, unsigned d) {
  StratumDims s;
  s.N_d = binomial(static_cast<unsigned>(n) + d - 1, d) - 1;
  s.nodal_dim = s.N_d - static_cast<long>(n);
  s.linear_system_dim = s.N_d - static_cast<long>(n * n);
  return s;
}

}  // namespace va
