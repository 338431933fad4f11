#pragma once

#include <cstddef>
#include <vector>

#include "va/groebner.hpp"
#include "va/linalg.hpp"
#include "va/polynomial.hpp"

namespace va {

/// A validated hypersurface: f homogeneous of degree d >= 3 in n variables,
/// smooth or with isolated singularities. T = n (d - 2) is the socle degree.
struct HypersurfaceInput {
  Polynomial f;
  std::size_t n = 0;
  unsigned d = 0;
  unsigned T = 0;
};

/// Checks homogeneity, d >= 3 and that the singular locus is at most
/// zero-dimensional. Throws ScopeError otherwise.
HypersurfaceInput validate_input(const Polynomial& f, const GroebnerConfig& config = {});

/// Shared Gröbner data for one hypersurface: the Jacobian ideal, its basis
/// and its saturation. Built once, then read-only.
class JacobianAnalysis {
 public:
  explicit JacobianAnalysis(const Polynomial& f, const GroebnerConfig& config = {});

  const HypersurfaceInput& input() const noexcept { return input_; }
  const Polynomial& f() const noexcept { return input_.f; }
  std::size_t n() const noexcept { return input_.n; }
  unsigned d() const noexcept { return input_.d; }
  unsigned T() const noexcept { return input_.T; }
  const GroebnerConfig& config() const noexcept { return config_; }

  const std::vector<Polynomial>& jacobian() const noexcept { return jacobian_; }
  const GroebnerBasis& jacobian_gb() const noexcept { return jacobian_gb_; }
  /// J : m^infinity. The unit ideal for smooth input.
  const GroebnerBasis& saturation() const noexcept { return saturation_; }
  bool smooth() const noexcept { return smooth_; }

 private:
  HypersurfaceInput input_;
  GroebnerConfig config_;
  std::vector<Polynomial> jacobian_;
  GroebnerBasis jacobian_gb_;
  GroebnerBasis saturation_;
  bool smooth_ = false;
};

/// Matrix of the multiplication map (a_1..a_n) -> sum a_i df/dx_i landing in
/// degree m. Rows are indexed by (monomial of degree m-d+1, partial index),
/// columns by graded_basis(n, m). Empty when m < d - 1.
MatrixQ jacobian_degree_matrix(const Polynomial& f, unsigned m);

/// (J_f)_m as a graded piece.
GradedPiece jacobian_piece(const Polynomial& f, unsigned m);

struct ConditionIReport {
  long dim_M_T_minus_1 = 0;  ///< dim of the Milnor algebra in degree T-1
  long dim_J_piece = 0;      ///< dim (J_f)_{T-1}
  long dim_R_piece = 0;      ///< dim R_{T-1}
  bool holds = false;        ///< dim_M_T_minus_1 == n
};

ConditionIReport condition_I(const HypersurfaceInput& in);

/// Coefficient of t^i in (1 + t + ... + t^{d-2})^n.
long smooth_reference_hf(std::size_t n, unsigned d, unsigned i);

/// Global Tjurina number: the stable Hilbert value of R / J^sat.
long tjurina_total(const JacobianAnalysis& a);

/// tau - n + dim (J^sat)_1.
long defect1(const JacobianAnalysis& a);

struct CoincidenceThreshold {
  /// Largest q through which the Milnor Hilbert function matches the smooth
  /// one; T + 1 for smooth input.
  long value = 0;
  bool smooth = false;
};
CoincidenceThreshold coincidence_threshold(const JacobianAnalysis& a);

/// dim (J^sat / J_f)_q.
long jacobian_module_dim(const JacobianAnalysis& a, unsigned q);

/// Milnor algebra Hilbert function dim (R/J_f)_q.
long milnor_hilbert_value(const JacobianAnalysis& a, unsigned q);

}  // namespace va
