#include "va/milnor.hpp"

#include "va/error.hpp"

namespace va {

namespace {

HypersurfaceInput check_shape(const Polynomial& f) {
  if (f.is_zero()) throw ScopeError(ScopeError::Kind::ZeroPolynomial, "the zero polynomial defines no hypersurface");
  if (!f.is_homogeneous())
    throw ScopeError(ScopeError::Kind::NotHomogeneous, "polynomial is not homogeneous");
  const int d = f.degree();
  if (d < 3)
    throw ScopeError(ScopeError::Kind::DegreeTooSmall,
                     "degree " + std::to_string(d) + " is below 3");
  if (f.nvars() < 2) throw ScopeError(ScopeError::Kind::DegreeTooSmall, "need at least two variables");
  HypersurfaceInput in;
  in.f = f;
  in.n = f.nvars();
  in.d = static_cast<unsigned>(d);
  in.T = static_cast<unsigned>(in.n) * (in.d - 2);
  return in;
}

void check_isolated(const GroebnerBasis& jac_gb) {
  const int dim = projective_dimension(jac_gb);
  if (dim > 0)
    throw ScopeError(ScopeError::Kind::NonIsolatedSingularities,
                     "singular locus has projective dimension " + std::to_string(dim), dim);
}

}  // namespace

HypersurfaceInput validate_input(const Polynomial& f, const GroebnerConfig& config) {
  HypersurfaceInput in = check_shape(f);
  const auto grad = gradient(f);
  check_isolated(buchberger(std::span<const Polynomial>(grad), MonomialOrder::grevlex(), config));
  return in;
}

JacobianAnalysis::JacobianAnalysis(const Polynomial& f, const GroebnerConfig& config)
    : input_(check_shape(f)),
      config_(config),
      jacobian_(gradient(f)),
      jacobian_gb_(buchberger(std::span<const Polynomial>(jacobian_), MonomialOrder::grevlex(), config)),
      saturation_(f.nvars(), MonomialOrder::grevlex()) {
  check_isolated(jacobian_gb_);
  smooth_ = projective_empty(jacobian_gb_);
  saturation_ = smooth_ ? buchberger({Polynomial(f.nvars(), Rational(1))})
                        : saturate_irrelevant_linear(std::span<const Polynomial>(jacobian_), config);
}

MatrixQ jacobian_degree_matrix(const Polynomial& f, unsigned m) {
  const std::size_t n = f.nvars();
  const GradedBasis target(n, m);
  MatrixQ out(0, target.size());
  const int d = f.degree();
  if (d < 1 || static_cast<int>(m) < d - 1) return out;
  const auto grad = gradient(f);
  for (const auto& mono : graded_basis(n, m - static_cast<unsigned>(d - 1)))
    for (std::size_t i = 0; i < n; ++i) out.append_row(coefficient_vector(grad[i].mul_monomial(mono), target));
  return out;
}

GradedPiece jacobian_piece(const Polynomial& f, unsigned m) {
  return GradedPiece{GradedBasis(f.nvars(), m), jacobian_degree_matrix(f, m)};
}

ConditionIReport condition_I(const HypersurfaceInput& in) {
  ConditionIReport r;
  const unsigned m = in.T - 1;
  const MatrixQ a = jacobian_degree_matrix(in.f, m);
  r.dim_R_piece = static_cast<long>(a.cols());
  r.dim_J_piece = static_cast<long>(rank(a));
  r.dim_M_T_minus_1 = r.dim_R_piece - r.dim_J_piece;
  r.holds = r.dim_M_T_minus_1 == static_cast<long>(in.n);
  return r;
}

long smooth_reference_hf(std::size_t n, unsigned d, unsigned i) {
  if (d < 2) throw PreconditionError("smooth_reference_hf: degree must be at least 2");
  // Coefficients of (1 + t + ... + t^{d-2})^n by repeated convolution.
  const std::size_t top = n * (d - 2);
  if (i > top) return 0;
  std::vector<long> c{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<long> next(c.size() + d - 2, 0);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (unsigned b = 0; b <= d - 2; ++b) next[a + b] += c[a];
    c = std::move(next);
  }
  return c[i];
}

long tjurina_total(const JacobianAnalysis& a) {
  if (a.smooth()) return 0;
  const GroebnerBasis& sat = a.saturation();
  long prev = hilbert_value(sat, a.T());
  for (unsigned q = a.T() + 1; q <= 4 * a.T() + 8; ++q) {
    const long v = hilbert_value(sat, q);
    if (v == prev) return v;
    prev = v;
  }
  throw DefectError("tjurina_total: Hilbert function of the saturation did not stabilize");
}

long defect1(const JacobianAnalysis& a) {
  const long sat_deg1 = static_cast<long>(a.n()) - hilbert_value(a.saturation(), 1);
  return tjurina_total(a) - static_cast<long>(a.n()) + sat_deg1;
}

CoincidenceThreshold coincidence_threshold(const JacobianAnalysis& a) {
  for (unsigned q = 0; q <= a.T() + 1; ++q) {
    if (hilbert_value(a.jacobian_gb(), q) != smooth_reference_hf(a.n(), a.d(), q))
      return {static_cast<long>(q) - 1, false};
  }
  return {static_cast<long>(a.T()) + 1, true};
}

long jacobian_module_dim(const JacobianAnalysis& a, unsigned q) {
  return hilbert_value(a.jacobian_gb(), q) - hilbert_value(a.saturation(), q);
}

long milnor_hilbert_value(const JacobianAnalysis& a, unsigned q) { return hilbert_value(a.jacobian_gb(), q); }

}  // namespace va
