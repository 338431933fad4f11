#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "va/linalg.hpp"
#include "va/rational.hpp"

namespace va {

/// Upper bound on the number of variables of any ring the library builds
/// (hypersurface variables plus the auxiliary variable used for saturation).
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Slots past the ring's variable count stay zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }

  bool divides(const Monomial& other) const noexcept;
  /// Exponent-wise difference; requires `other.divides(*this)`.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

  const std::array<std::uint16_t, kMaxVars>& exponents() const noexcept { return exps_; }

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  unsigned degree_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ... . Used for bases, coefficient
/// vectors and printing.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted by decreasing grlex order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 1);
  Polynomial(std::size_t nvars, const Rational& constant);
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(std::size_t nvars, const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial mul_monomial(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable `i` by `value` (ring size unchanged).
  Polynomial substitute(std::size_t i, const Polynomial& value) const;
  /// Reinterprets the polynomial in a ring with `nvars` variables, sending
  /// variable j to variable `map[j]`.
  Polynomial remap(std::size_t nvars, std::span<const std::size_t> map) const;

  /// Scales to integer coefficients with gcd 1 and positive leading (grlex)
  /// coefficient. Zero stays zero.
  Polynomial primitive() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;

 private:
  void normalize();

  std::size_t nvars_;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t i);
std::vector<Polynomial> gradient(const Polynomial& f);

/// Ordered monomial basis of the degree-m piece of a polynomial ring.
class GradedBasis {
 public:
  GradedBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  /// Position of `m`; throws PreconditionError if `m` is not of this degree.
  std::size_t index_of(const Monomial& m) const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexGreater> index_;
};

/// Degree-m monomials in decreasing grlex order; C(n+m-1, m) of them.
std::vector<Monomial> graded_basis(std::size_t nvars, unsigned m);

/// Coordinates of `f` in `graded_basis(nvars, m)`. `f` must be zero or
/// homogeneous of degree m.
VectorQ coefficient_vector(const Polynomial& f, unsigned m);
VectorQ coefficient_vector(const Polynomial& f, const GradedBasis& basis);
Polynomial from_coefficient_vector(const VectorQ& v, const GradedBasis& basis);

/// A subspace of the degree-m piece, given by spanning coefficient rows.
struct GradedPiece {
  GradedBasis basis;
  MatrixQ rows;
};

/// f(A x): variable x_i becomes sum_j A(i, j) x_j. Throws if A is singular.
Polynomial substitute_linear(const Polynomial& f, const MatrixQ& a);

/// Determinant of the Sylvester matrix of univariate p and q (deg q rows of
/// p's coefficients first).
Rational resultant_univariate(const Polynomial& p, const Polynomial& q);

/// Determinant of the matrix of second partial derivatives.
Polynomial hessian_det(const Polynomial& f);

/// Determinant of a square matrix of polynomials by cofactor expansion.
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m);

struct PowerTerm {
  Integer multinomial;  ///< m! / alpha!
  Monomial x_monomial;  ///< x^alpha
};

/// Symbolic expansion (a1 x1 + ... + an xn)^m = sum multinomial * a^alpha * x^alpha.
/// The a-monomial coincides with the x-monomial exponent vector, so each
/// entry stores it once. Ordered like graded_basis(n, m).
std::vector<PowerTerm> power_linear_form_symbolic(std::size_t nvars, unsigned m);

/// (sum a_i x_i)^m with concrete coefficients.
Polynomial linear_form_power(std::span<const Rational> a, unsigned m);
Polynomial linear_form(std::span<const Rational> a);

}  // namespace va
