#include "va/apolar.hpp"

#include "va/error.hpp"

namespace va {

Polynomial apolar_action(const Polynomial& h, const Polynomial& F) {
  if (h.nvars() != F.nvars()) throw PreconditionError("apolar_action: variable count mismatch");
  const std::size_t n = F.nvars();
  std::vector<Term> out;
  for (const auto& th : h.terms())
    for (const auto& tf : F.terms()) {
      if (!th.mono.divides(tf.mono)) continue;
      Rational c = th.coeff * tf.coeff;
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned k = 0; k < th.mono[i]; ++k) c *= tf.mono[i] - k;
      out.push_back({tf.mono.quotient(th.mono), c});
    }
  return Polynomial(n, std::move(out));
}

MatrixQ apolar_pairing_matrix(std::size_t n, unsigned e) {
  const GradedBasis basis(n, e);
  MatrixQ m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Polynomial r = apolar_action(Polynomial::monomial(n, basis[i]), Polynomial::monomial(n, basis[j]));
      m(i, j) = r.is_zero() ? Rational(0) : r.terms().front().coeff;
    }
  return m;
}

namespace {

Rational multi_factorial(const Monomial& a, std::size_t n) {
  Integer acc = 1;
  for (std::size_t i = 0; i < n; ++i) acc *= factorial(a[i]);
  return Rational(acc);
}

}  // namespace

InverseSystem inverse_system(const JacobianAnalysis& a) {
  if (!a.smooth()) throw PreconditionError("inverse_system: hypersurface is singular");
  const std::size_t n = a.n();
  const unsigned T = a.T();
  const GradedBasis basis(n, T);
  MatrixQ pairing = jacobian_degree_matrix(a.f(), T);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Rational w = multi_factorial(basis[c], n);
    for (std::size_t r = 0; r < pairing.rows(); ++r) pairing(r, c) *= w;
  }
  const auto kernel = kernel_basis(pairing);
  if (kernel.size() != 1)
    throw DefectError("inverse_system: orthogonal complement of (J_f)_T has dimension " +
                      std::to_string(kernel.size()));
  InverseSystem inv{from_coefficient_vector(kernel.front(), basis).primitive(), T};

  for (const auto& g : a.jacobian()) {
    if (!apolar_action(g, inv.F).is_zero()) throw DefectError("inverse_system: a partial derivative does not annihilate F");
    for (unsigned q = 1; q + static_cast<unsigned>(g.degree()) <= T; ++q)
      for (const auto& m : graded_basis(n, q))
        if (!apolar_action(g.mul_monomial(m), inv.F).is_zero())
          throw DefectError("inverse_system: a multiple of a partial derivative does not annihilate F");
  }
  return inv;
}

bool smoothness(const Polynomial& F, const GroebnerConfig& config) {
  const auto grad = gradient(F);
  return projective_empty(buchberger(std::span<const Polynomial>(grad), MonomialOrder::grevlex(), config));
}

bool va_via_inverse_system(const JacobianAnalysis& a) { return smoothness(inverse_system(a).F, a.config()); }

bool hessian_socle_check(const JacobianAnalysis& a) {
  if (!a.smooth()) throw PreconditionError("hessian_socle_check: hypersurface is singular");
  return !normal_form(hessian_det(a.f()), a.jacobian_gb()).is_zero();
}

long annihilator_dim(const Polynomial& F, unsigned q) {
  const std::size_t n = F.nvars();
  const GradedBasis src(n, q);
  const int deg = F.degree();
  if (F.is_zero() || static_cast<int>(q) > deg) return static_cast<long>(src.size());
  const GradedBasis dst(n, static_cast<unsigned>(deg) - q);
  MatrixQ m(0, dst.size());
  for (const auto& mono : src.monomials())
    m.append_row(coefficient_vector(apolar_action(Polynomial::monomial(n, mono), F), dst));
  return static_cast<long>(src.size() - rank(m));
}

}  // namespace va
