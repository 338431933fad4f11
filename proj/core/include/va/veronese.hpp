#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "va/groebner.hpp"
#include "va/milnor.hpp"
#include "va/polynomial.hpp"

namespace va {

// --- Catalecticants ---------------------------------------------------------

enum class CatalecticantConvention {
  /// Entry (i, beta) is the coefficient of x^beta in d/dx_i of the form. A
  /// coefficient vector has rank 1 exactly when it is a power of a linear form.
  Derivative,
  /// Entry (i, beta) is the coordinate z_{beta + e_i}; the rank-one locus is
  /// the Veronese variety in divided-power coordinates.
  DividedPower,
};

/// First catalecticant (n x dim R_{m-1}) of the degree-m form with
/// coordinates v, in the Derivative convention.
MatrixQ catalecticant(const VectorQ& v, std::size_t n, unsigned m);
std::size_t catalecticant_rank_at(const VectorQ& v, std::size_t n, unsigned m);

/// The catalecticant with symbolic entries in the dim R_m coordinates
/// z_1..z_N (ring with N variables).
std::vector<std::vector<Polynomial>> catalecticant_symbolic(
    std::size_t n, unsigned m, CatalecticantConvention convention = CatalecticantConvention::Derivative);

/// All 2x2 minors of a matrix of polynomials.
std::vector<Polynomial> two_by_two_minors(const std::vector<std::vector<Polynomial>>& m);

// --- Projection of the Veronese variety to R_m / (J_f)_m --------------------

/// The linear map R_m -> R_m / L for L = (J_f)_m, in the canonical quotient
/// basis given by the free columns of the rref of L.
class QuotientProjection {
 public:
  QuotientProjection(const Polynomial& f, unsigned m);

  std::size_t n() const noexcept { return n_; }
  unsigned degree() const noexcept { return m_; }
  const GradedBasis& basis() const noexcept { return basis_; }
  const RrefResult& subspace() const noexcept { return rref_; }
  std::size_t quotient_dim() const noexcept { return rref_.cols - rref_.rank; }

  VectorQ project(const Polynomial& g) const;
  /// Projection of l^m for l = sum a_i x_i.
  VectorQ project_power(const VectorQ& a) const;
  bool power_in_subspace(const VectorQ& a) const { return is_zero(project_power(a)); }

  /// The quotient coordinates of (sum a_i x_i)^m as forms of degree m in
  /// the parameters a_1..a_n, one per quotient basis vector.
  std::vector<Polynomial> symbolic_forms() const;

 private:
  std::size_t n_;
  unsigned m_;
  GradedBasis basis_;
  RrefResult rref_;
};

// --- Condition (II) ---------------------------------------------------------

struct ConditionIIReport {
  bool evaluated = false;
  bool empty = false;
  /// Coefficients a of a linear form with (sum a_i x_i)^{T-1} in (J_f)_{T-1}.
  std::optional<VectorQ> witness;
  /// Basis of the ideal of the quotient forms; present whenever Buchberger ran.
  std::optional<GroebnerBasis> certificate;
  std::vector<Polynomial> forms;
  std::string note;
};

/// Decides whether P((J_f)_{T-1}) meets the Veronese variety. Requires
/// condition (I); throws PreconditionError otherwise.
ConditionIIReport condition_II(const JacobianAnalysis& a);

struct LefschetzResult {
  bool success = false;
  std::optional<VectorQ> witness;
  std::vector<Rational> determinants;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  long coeff_bound = 0;
};

/// Random trials of l^{T-2} : (M_f)_1 -> (M_f)_{T-1}; success on the first
/// nonzero determinant. Requires condition (I).
LefschetzResult lefschetz_degree_one(const JacobianAnalysis& a, std::uint64_t seed, unsigned trials = 5,
                                     long coeff_bound = 50);

/// Determinant of l^{T-2} : (M_f)_1 -> (M_f)_{T-1} for one fixed l.
Rational lefschetz_determinant(const QuotientProjection& proj, const VectorQ& l, unsigned T);

/// Deterministic per-trial coefficient vector in [-bound, bound]^n, not zero.
VectorQ lefschetz_trial_form(std::uint64_t seed, unsigned trial, std::size_t n, long bound);

// --- Verdict ---------------------------------------------------------------

struct CrossCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckOptions {
  bool lefschetz = true;
  std::uint64_t seed = 0;
  unsigned trials = 5;
  long coeff_bound = 50;
  GroebnerConfig groebner{};
};

struct VACertificate {
  std::size_t n = 0;
  unsigned d = 0;
  unsigned T = 0;
  bool smooth = false;
  ConditionIReport condition_I;
  ConditionIIReport condition_II;
  bool verdict = false;
  std::optional<LefschetzResult> lefschetz;
  std::vector<CrossCheck> cross_checks;
  std::map<std::string, double> timings_ms;

  bool all_cross_checks_pass() const;
};

VACertificate check_va(const JacobianAnalysis& a, const CheckOptions& options = {});
VACertificate check_va(const Polynomial& f, const CheckOptions& options = {});

// --- Base locus of l -> l^m mod (J_f)_m on I(Gamma)_1 ------------------------

struct PhiBaseLocus {
  std::vector<VectorQ> linear_forms;  ///< basis of I(Gamma)_1
  long dim_I1 = 0;
  long dim_N_m = 0;
  bool dims_match = false;  ///< both equal n - r
  bool empty = false;
  /// Rational base points, as coefficient vectors of linear forms.
  std::vector<VectorQ> base_points;
  bool base_points_complete = false;
  std::optional<GroebnerBasis> certificate;
  /// For r = n - 1: whether H^m lies in (J_f)_m for the hyperplane H.
  std::optional<bool> hyperplane_power_in_jacobian;
};

/// `points` are the singular points (r < n of them, imposing independent
/// linear conditions). Throws PreconditionError otherwise.
PhiBaseLocus phi_base_locus(const JacobianAnalysis& a, const std::vector<VectorQ>& points);

// --- Auxiliary nodal forms and stratum dimensions --------------------------

/// sum_{i<j<k} x_i x_j x_k for d = 3, else sum_{i<j} (x_i^{d-2} x_j^2 + x_i^2 x_j^{d-2}).
Polynomial f0_form(std::size_t n, unsigned d);

struct StratumDims {
  Integer N_d;                ///< dim P(R_d) = C(n+d-1, d) - 1
  Integer nodal_dim;          ///< N_d - n
  Integer linear_system_dim;  ///< N_d - n^2
};
StratumDims stratum_dims(std::size_t n, unsigned d);

/// Linear substitution a -> B b sending forms in n parameters to forms in
/// B.cols() parameters.
Polynomial substitute_parameters(const Polynomial& g, const MatrixQ& b);

}  // namespace va
