#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "va/polynomial.hpp"

namespace va {

enum class OrderKind { Grevlex, Grlex, Lex, BlockElimination };

/// Monomial order with variable priority x1 > x2 > ... . BlockElimination(k)
/// compares the first k variables by grevlex and breaks ties by grevlex on
/// the remaining ones, so it eliminates the first k variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder grlex() { return {OrderKind::Grlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::BlockElimination, k}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

const char* to_string(OrderKind kind);

/// Degree cap for Buchberger. Defaults to 60, overridden by the
/// VA_DEGREE_CAP environment variable.
int default_degree_cap();

struct GroebnerConfig {
  int degree_cap = default_degree_cap();
};

/// Polynomial with integer coefficients sorted by a monomial order; the
/// working representation of the Buchberger engine.
struct IntTerm {
  Monomial mono;
  Integer coeff;
};
using IntPoly = std::vector<IntTerm>;

/// Reduced Gröbner basis: monic generators sorted by increasing leading
/// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const noexcept;
  bool is_zero_ideal() const noexcept { return generators_.empty(); }

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, const MonomialOrder&, const GroebnerConfig&);
  friend Polynomial normal_form(const Polynomial&, const GroebnerBasis&);

  std::size_t nvars_;
  MonomialOrder order_;
  bool reduced_ = false;
  std::vector<Polynomial> generators_;
  std::vector<IntPoly> integral_;  // primitive integer copies, same order
};

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order = MonomialOrder::grevlex(),
                         const GroebnerConfig& config = {});
inline GroebnerBasis buchberger(std::initializer_list<Polynomial> gens,
                                const MonomialOrder& order = MonomialOrder::grevlex(),
                                const GroebnerConfig& config = {}) {
  std::vector<Polynomial> v(gens);
  return buchberger(std::span<const Polynomial>(v), order, config);
}

/// Unique remainder of `f` modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);
/// Ideal equality via normal forms in both directions.
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

/// Leading term of `f` under `order`.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// True iff the projective zero set of the (homogeneous) ideal is empty.
bool projective_empty(const GroebnerBasis& gb);

/// Krull dimension of R/I; -1 for the unit ideal.
int krull_dim_quotient(const GroebnerBasis& gb);
/// Dimension of the projective zero set of a homogeneous ideal; -1 when empty.
int projective_dimension(const GroebnerBasis& gb);

/// Number of standard monomials of degree m.
long hilbert_value(const GroebnerBasis& gb, unsigned m);

/// I : (x_i)^infinity.
GroebnerBasis saturate_by_variable(std::span<const Polynomial> gens, std::size_t i, const GroebnerConfig& config = {});
/// I intersect J.
GroebnerBasis intersect(std::span<const Polynomial> a, std::span<const Polynomial> b,
                        const GroebnerConfig& config = {});
/// (I : m^infinity) for the irrelevant ideal m = (x1, ..., xn).
GroebnerBasis saturate_irrelevant(std::span<const Polynomial> gens, const GroebnerConfig& config = {});

/// I : l^infinity for a linear form l, by Bayer's method: in grevlex with l as
/// the last coordinate, each basis element is divided by its largest power of l.
GroebnerBasis saturate_by_linear_form(std::span<const Polynomial> gens, const VectorQ& l,
                                      const GroebnerConfig& config = {});
/// The same ideal as saturate_irrelevant, computed as I : l^infinity for a
/// linear form l vanishing at no point of V(I). Much cheaper than the
/// extra-variable construction in general coordinates. Falls back to
/// saturate_irrelevant when no candidate l qualifies.
GroebnerBasis saturate_irrelevant_linear(std::span<const Polynomial> gens, const GroebnerConfig& config = {});

/// Rational roots with multiplicities of a nonzero univariate polynomial.
struct RationalRoots {
  std::vector<std::pair<Rational, unsigned>> roots;
  /// True iff the polynomial splits into rational linear factors.
  bool splits = false;
};
RationalRoots rational_roots(const Polynomial& univariate);

/// Rational points of the projective zero set of a homogeneous ideal,
/// normalized so the last nonzero coordinate is 1.
struct RationalPointSet {
  std::vector<VectorQ> points;
  /// Every eliminant met splits over the rationals, so no irrational point exists.
  bool complete = true;
  /// Some chart was not zero-dimensional; the search was abandoned there.
  bool positive_dimensional = false;
};
RationalPointSet rational_projective_points(std::span<const Polynomial> gens, const GroebnerConfig& config = {});

/// Scales a nonzero point so its last nonzero coordinate is 1.
VectorQ normalize_projective(VectorQ p);

}  // namespace va
