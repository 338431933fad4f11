#include "va/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "va/error.hpp"

namespace va {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw PreconditionError("Monomial: too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw PreconditionError("Monomial: variable index out of range");
  if (e > 0xFFFF) throw PreconditionError("Monomial: exponent too large");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) q.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  q.degree_ = degree_ - other.degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += l.exps_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial p;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 0xFFFF) throw PreconditionError("Monomial: exponent overflow");
    p.exps_[i] = static_cast<std::uint16_t>(e);
  }
  p.degree_ = degree_ + other.degree_;
  return p;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents() <=> b.exponents();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0 || nvars > kMaxVars) throw PreconditionError("Polynomial: unsupported variable count");
}

Polynomial::Polynomial(std::size_t nvars, const Rational& constant) : Polynomial(nvars) {
  if (sgn(constant) != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : Polynomial(nvars) {
  terms_ = std::move(terms);
  normalize();
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw PreconditionError("Polynomial::variable: index out of range");
  return monomial(nvars, Monomial::variable(i));
}

Polynomial Polynomial::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

void Polynomial::normalize() {
  for (const auto& t : terms_)
    for (std::size_t i = nvars_; i < kMaxVars; ++i)
      if (t.mono[i] != 0) throw PreconditionError("Polynomial: exponent outside the ring");
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return GrlexGreater{}(a.mono, b.mono); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms_ = std::move(merged);
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return GrlexGreater{}(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && GrlexGreater{}(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || GrlexGreater{}(b[j].mono, a[i].mono)) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw PreconditionError("Polynomial: variable count mismatch");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  Polynomial r(a.nvars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(nvars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw PreconditionError("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::size_t i, const Polynomial& value) const {
  check_same_ring(*this, value);
  unsigned max_e = 0;
  for (const auto& t : terms_) max_e = std::max(max_e, t.mono[i]);
  std::vector<Polynomial> powers{Polynomial(nvars_, Rational(1))};
  for (unsigned k = 1; k <= max_e; ++k) powers.push_back(powers.back() * value);
  Polynomial out(nvars_);
  for (const auto& t : terms_) {
    Monomial rest = t.mono;
    const unsigned e = rest[i];
    rest.set(i, 0);
    out += powers[e].mul_monomial(rest, t.coeff);
  }
  return out;
}

Polynomial Polynomial::remap(std::size_t nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw PreconditionError("remap: map size mismatch");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (t.mono[j] == 0) continue;
      if (map[j] >= nvars) throw PreconditionError("remap: target index out of range");
      m.set(map[j], m[map[j]] + t.mono[j]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial(nvars, std::move(terms));
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(terms_.front().coeff) < 0) scale = -scale;
  return *this * scale;
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ---------------------------------------------------------------------------

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.nvars()) throw PreconditionError("partial_derivative: variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return Polynomial(f.nvars(), std::move(terms));
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(partial_derivative(f, i));
  return g;
}

std::vector<Monomial> graded_basis(std::size_t nvars, unsigned m) {
  if (nvars == 0 || nvars > kMaxVars) throw PreconditionError("graded_basis: unsupported variable count");
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  // Lexicographically decreasing compositions of m: exactly decreasing grlex.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned remaining) {
    if (i + 1 == nvars) {
      e[i] = remaining;
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, remaining - k);
    }
  };
  rec(0, m);
  return out;
}

GradedBasis::GradedBasis(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), monomials_(graded_basis(nvars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t GradedBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw PreconditionError("GradedBasis: monomial not in basis");
  return it->second;
}

VectorQ coefficient_vector(const Polynomial& f, const GradedBasis& basis) {
  if (f.nvars() != basis.nvars()) throw PreconditionError("coefficient_vector: variable count mismatch");
  VectorQ v(basis.size());
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != basis.degree())
      throw PreconditionError("coefficient_vector: polynomial is not homogeneous of degree " +
                              std::to_string(basis.degree()));
    v[basis.index_of(t.mono)] = t.coeff;
  }
  return v;
}

VectorQ coefficient_vector(const Polynomial& f, unsigned m) {
  return coefficient_vector(f, GradedBasis(f.nvars(), m));
}

Polynomial from_coefficient_vector(const VectorQ& v, const GradedBasis& basis) {
  if (v.size() != basis.size()) throw PreconditionError("from_coefficient_vector: length mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) terms.push_back({basis[i], v[i]});
  return Polynomial(basis.nvars(), std::move(terms));
}

Polynomial substitute_linear(const Polynomial& f, const MatrixQ& a) {
  const std::size_t n = f.nvars();
  if (a.rows() != n || a.cols() != n) throw PreconditionError("substitute_linear: matrix shape mismatch");
  if (sgn(determinant(a)) == 0) throw PreconditionError("substitute_linear: matrix is singular");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial li(n);
    for (std::size_t j = 0; j < n; ++j) li += Polynomial::variable(n, j) * a(i, j);
    images.push_back(std::move(li));
  }
  // Power tables per variable, then expand term by term.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned max_e = 0;
    for (const auto& t : f.terms()) max_e = std::max(max_e, t.mono[i]);
    powers[i].push_back(Polynomial(n, Rational(1)));
    for (unsigned k = 1; k <= max_e; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial out(n);
  for (const auto& t : f.terms()) {
    Polynomial term(n, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) term = term * powers[i][t.mono[i]];
    out += term;
  }
  return out;
}

namespace {

VectorQ univariate_coeffs(const Polynomial& p) {
  if (p.nvars() != 1) throw PreconditionError("resultant_univariate: polynomial is not univariate");
  if (p.is_zero()) throw PreconditionError("resultant_univariate: zero polynomial");
  const int deg = p.degree();
  VectorQ c(static_cast<std::size_t>(deg) + 1);  // c[0] = leading
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(deg) - t.mono[0]] = t.coeff;
  return c;
}

}  // namespace

Rational resultant_univariate(const Polynomial& p, const Polynomial& q) {
  const VectorQ a = univariate_coeffs(p), b = univariate_coeffs(q);
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1;
  MatrixQ s(size, size);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = a[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = b[k];
  return determinant(s);
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw PreconditionError("polynomial_determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != k) throw PreconditionError("polynomial_determinant: matrix is not square");
  const std::size_t nv = m[0][0].nvars();
  if (k == 1) return m[0][0];
  Polynomial det(nv);
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * polynomial_determinant(minor);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

Polynomial hessian_det(const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (n < 2) throw PreconditionError("hessian_det: needs at least two variables");
  std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial fi = partial_derivative(f, i);
    for (std::size_t j = i; j < n; ++j) {
      h[i][j] = partial_derivative(fi, j);
      h[j][i] = h[i][j];
    }
  }
  return polynomial_determinant(h);
}

std::vector<PowerTerm> power_linear_form_symbolic(std::size_t nvars, unsigned m) {
  if (m < 1) throw PreconditionError("power_linear_form_symbolic: degree must be positive");
  std::vector<PowerTerm> out;
  const Integer mfact = factorial(m);
  for (const auto& mono : graded_basis(nvars, m)) {
    Integer denom = 1;
    for (std::size_t i = 0; i < nvars; ++i) denom *= factorial(mono[i]);
    out.push_back({mfact / denom, mono});
  }
  return out;
}

Polynomial linear_form(std::span<const Rational> a) {
  Polynomial l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l += Polynomial::variable(a.size(), i) * a[i];
  return l;
}

Polynomial linear_form_power(std::span<const Rational> a, unsigned m) { return linear_form(a).pow(m); }

}  // namespace va
