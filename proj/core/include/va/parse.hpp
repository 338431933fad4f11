#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "va/polynomial.hpp"

namespace va {

/// Text of a polynomial in a ring with `nvars` variables.
///
/// Grammar: sums and differences of products of factors, `^` with a
/// nonnegative integer exponent, parentheses, integer literals and `p/q`
/// rational literals. Every product needs an explicit `*`. Variables are
/// `<prefix>1 .. <prefix>N`; with the default prefix `x` the aliases
/// `x, y, z` are accepted when N <= 3 and `x, y, z, w` when N = 4.
struct PolySource {
  std::string_view text;
  std::size_t nvars = 0;
  char prefix = 'x';
};

Polynomial parse_poly(const PolySource& src);
inline Polynomial parse_poly(std::string_view text, std::size_t nvars) {
  return parse_poly(PolySource{text, nvars});
}

enum class VariableStyle {
  Auto,     ///< aliases when the ring is small enough, indexed otherwise
  Indexed,  ///< always <prefix>1 .. <prefix>N
};

/// Canonical text: terms in decreasing grlex order, signs folded into the
/// joins, unit coefficients dropped. parse_poly(render_poly(p)) == p.
std::string render_poly(const Polynomial& p, VariableStyle style = VariableStyle::Auto, char prefix = 'x');
std::string render_monomial(const Monomial& m, std::size_t nvars, VariableStyle style = VariableStyle::Auto,
                            char prefix = 'x');

}  // namespace va
