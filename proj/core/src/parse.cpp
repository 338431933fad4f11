#include "va/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "va/error.hpp"

namespace va {

namespace {

constexpr std::string_view kAliases = "xyzw";

bool aliases_enabled(std::size_t nvars, char prefix) { return prefix == 'x' && nvars <= 4; }

std::string variable_name(std::size_t i, std::size_t nvars, VariableStyle style, char prefix) {
  if (style == VariableStyle::Auto && aliases_enabled(nvars, prefix)) return std::string(1, kAliases[i]);
  return std::string(1, prefix) + std::to_string(i + 1);
}

class Parser {
 public:
  Parser(const PolySource& src) : src_(src), text_(src.text) {}

  Polynomial run() {
    if (src_.nvars == 0) throw PreconditionError("parse_poly: nvars must be at least 1");
    if (src_.nvars > kMaxVars) throw PreconditionError("parse_poly: too many variables");
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_ws();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
      fail("implicit multiplication is not allowed; use '*'");
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
        fail("exponent must be a nonnegative integer");
      auto e = integer_literal();
      if (!e) {
        pos_ = at;
        fail("exponent must be a nonnegative integer");
      }
      reject_float();
      if (!e->fits_uint_p() || e->get_ui() > 0xFFFF) {
        pos_ = at;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(e->get_ui()));
    }
    return base;
  }

  std::optional<Integer> integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void reject_float() {
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      if (text_[pos_] == '.') fail("floating-point literals are not allowed");
    }
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = *integer_literal();
      reject_float();
      Integer den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        auto d = integer_literal();
        if (!d) fail("expected integer denominator");
        reject_float();
        if (sgn(*d) == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        den = *d;
      }
      Rational r(num, den);
      r.canonicalize();
      return Polynomial(src_.nvars, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto idx = resolve(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(src_.nvars, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::optional<std::size_t> resolve(std::string_view name) const {
    if (name.size() == 1 && aliases_enabled(src_.nvars, src_.prefix)) {
      const auto k = kAliases.find(name[0]);
      const std::size_t limit = src_.nvars == 4 ? 4 : src_.nvars;
      if (k != std::string_view::npos && k < limit) return k;
    }
    if (name.size() >= 2 && name[0] == src_.prefix) {
      std::size_t v = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        v = v * 10 + static_cast<std::size_t>(name[i] - '0');
        if (v > src_.nvars) return std::nullopt;
      }
      if (name[1] == '0' || v == 0) return std::nullopt;
      return v - 1;
    }
    return std::nullopt;
  }

  const PolySource& src_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const PolySource& src) { return Parser(src).run(); }

std::string render_monomial(const Monomial& m, std::size_t nvars, VariableStyle style, char prefix) {
  std::string out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, nvars, style, prefix);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_poly(const Polynomial& p, VariableStyle style, char prefix) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << render_monomial(t.mono, p.nvars(), style, prefix);
    }
  }
  return os.str();
}

}  // namespace va
