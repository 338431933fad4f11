#pragma once

#include <cstddef>

#include "va/linalg.hpp"
#include "va/milnor.hpp"
#include "va/polynomial.hpp"

namespace va {

/// h(d/dy_1, ..., d/dy_n) F by plain differentiation. Both polynomials live
/// in rings with the same number of variables.
Polynomial apolar_action(const Polynomial& h, const Polynomial& F);

/// Matrix of the pairing R_e x S_e -> k on the monomial bases; diagonal with
/// entries alpha!.
MatrixQ apolar_pairing_matrix(std::size_t n, unsigned e);

/// Dual socle generator of a smooth Milnor algebra, degree T, primitive with
/// positive leading coefficient in grlex.
struct InverseSystem {
  Polynomial F;
  unsigned degree = 0;
};

/// Throws PreconditionError for singular input and DefectError when the
/// orthogonal complement of (J_f)_T is not a line or F fails re-verification.
InverseSystem inverse_system(const JacobianAnalysis& a);

/// V(F) smooth, i.e. the gradient ideal of F is irrelevant-primary.
bool smoothness(const Polynomial& F, const GroebnerConfig& config = {});

/// smoothness(inverse_system(f)); requires smooth f.
bool va_via_inverse_system(const JacobianAnalysis& a);

/// The Hessian of f is nonzero in the Milnor algebra; requires smooth f.
bool hessian_socle_check(const JacobianAnalysis& a);

/// dim { h in R_q : h o F = 0 }.
long annihilator_dim(const Polynomial& F, unsigned q);

}  // namespace va
