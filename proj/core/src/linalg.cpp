#include "va/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "va/error.hpp"

namespace va {

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer denominator_lcm(const VectorQ& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

const char* to_string(ScopeError::Kind kind) {
  switch (kind) {
    case ScopeError::Kind::NotHomogeneous: return "NotHomogeneous";
    case ScopeError::Kind::DegreeTooSmall: return "DegreeTooSmall";
    case ScopeError::Kind::NonIsolatedSingularities: return "NonIsolatedSingularities";
    case ScopeError::Kind::ZeroPolynomial: return "ZeroPolynomial";
  }
  return "Unknown";
}

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols, VectorQ entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw PreconditionError("MatrixQ: entry count mismatch");
}

MatrixQ MatrixQ::identity(std::size_t k) {
  MatrixQ m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  MatrixQ m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

VectorQ MatrixQ::row(std::size_t r) const {
  return VectorQ(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void MatrixQ::append_row(const VectorQ& row) {
  if (row.size() != cols_) throw PreconditionError("MatrixQ::append_row: length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

MatrixQ MatrixQ::transposed() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("MatrixQ: product shape mismatch");
  MatrixQ out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

VectorQ MatrixQ::operator*(const VectorQ& v) const {
  if (cols_ != v.size()) throw PreconditionError("MatrixQ: vector length mismatch");
  VectorQ out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const MatrixQ& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

std::vector<std::size_t> RrefResult::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Each row scaled by the lcm of its denominators. Row scaling preserves the
// row space and multiplies the determinant by the product of the scales.
IntMatrix clear_denominators(const MatrixQ& m, Integer* scale_product = nullptr) {
  IntMatrix a(m.rows(), std::vector<Integer>(m.cols()));
  if (scale_product) *scale_product = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    if (scale_product) *scale_product *= l;
  }
  return a;
}

struct EchelonInfo {
  std::vector<std::size_t> pivots;
  bool swapped_odd = false;
};

// Bareiss elimination in place. After the call the first `pivots.size()`
// rows are in echelon form; the remaining rows are zero.
EchelonInfo bareiss(IntMatrix& a, std::size_t cols) {
  EchelonInfo info;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    // Prefer the smallest nonzero entry as pivot to keep numbers short.
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (piv == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[piv][c].get_mpz_t()) < 0) piv = i;
    }
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      info.swapped_odd = !info.swapped_odd;
    }
    const Integer& p = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      Integer& lead = a[i][c];
      if (sgn(lead) == 0) {
        // Still has to be scaled by p/prev to keep the Bareiss invariant.
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (sgn(a[i][j]) == 0) continue;
          a[i][j] *= p;
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * a[i][j] - lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = p;
    info.pivots.push_back(c);
    ++r;
  }
  return info;
}

}  // namespace

RrefResult rref(const MatrixQ& m) {
  RrefResult out;
  out.cols = m.cols();
  if (m.rows() == 0 || m.cols() == 0) {
    out.rref = MatrixQ(0, m.cols());
    return out;
  }
  IntMatrix a = clear_denominators(m);
  EchelonInfo info = bareiss(a, m.cols());
  out.pivots = info.pivots;
  out.rank = info.pivots.size();

  MatrixQ e(out.rank, m.cols());
  for (std::size_t r = 0; r < out.rank; ++r) {
    // Divide by the gcd first so the rational pass sees small numbers.
    Integer g = 0;
    for (std::size_t c = out.pivots[r]; c < m.cols(); ++c)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[r][c].get_mpz_t());
    Rational inv_lead(g, a[r][out.pivots[r]]);
    inv_lead.canonicalize();
    for (std::size_t c = out.pivots[r]; c < m.cols(); ++c) {
      if (sgn(a[r][c]) == 0) continue;
      Integer v = a[r][c] / g;
      e(r, c) = Rational(v) * inv_lead;
      e(r, c).canonicalize();
    }
  }
  for (std::size_t r = out.rank; r-- > 0;) {
    const std::size_t pc = out.pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      const Rational factor = e(above, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c)
        if (sgn(e(r, c)) != 0) e(above, c) -= factor * e(r, c);
    }
  }
  out.rref = std::move(e);
  return out;
}

std::size_t rank(const MatrixQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix a = clear_denominators(m);
  return bareiss(a, m.cols()).pivots.size();
}

std::vector<VectorQ> kernel_basis(const MatrixQ& m) {
  const RrefResult r = rref(m);
  std::vector<VectorQ> basis;
  for (std::size_t free : r.free_columns()) {
    VectorQ v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  Integer scale;
  IntMatrix a = clear_denominators(m, &scale);
  EchelonInfo info = bareiss(a, m.cols());
  if (info.pivots.size() < m.rows()) return 0;
  Rational det(a[m.rows() - 1][m.cols() - 1], scale);
  det.canonicalize();
  return info.swapped_odd ? Rational(-det) : det;
}

MatrixQ inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse: matrix is not square");
  const std::size_t k = m.rows();
  MatrixQ aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.rank < k || (k > 0 && r.pivots[k - 1] != k - 1))
    throw PreconditionError("inverse: matrix is singular");
  MatrixQ inv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv(i, j) = r.rref(i, k + j);
  return inv;
}

VectorQ quotient_coords(const VectorQ& v, const RrefResult& l) {
  if (v.size() != l.cols) throw PreconditionError("quotient_coords: length mismatch");
  VectorQ residual = v;
  for (std::size_t i = 0; i < l.rank; ++i) {
    const Rational factor = residual[l.pivots[i]];
    if (sgn(factor) == 0) continue;
    for (std::size_t c = l.pivots[i]; c < l.cols; ++c)
      if (sgn(l.rref(i, c)) != 0) residual[c] -= factor * l.rref(i, c);
  }
  VectorQ out;
  out.reserve(l.cols - l.rank);
  for (std::size_t c : l.free_columns()) out.push_back(residual[c]);
  return out;
}

bool in_row_space(const VectorQ& v, const RrefResult& l) { return is_zero(quotient_coords(v, l)); }

bool is_zero(const VectorQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t rank_mod_p(const MatrixQ& m, std::uint64_t prime) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const Integer p(static_cast<unsigned long>(prime));
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer num = m(r, c).get_num() % p;
      Integer den = m(r, c).get_den() % p;
      if (sgn(den) == 0) throw PreconditionError("rank_mod_p: denominator vanishes mod p");
      if (num < 0) num += p;
      Integer inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      Integer v = (num * inv) % p;
      a[r][c] = v.get_ui();
    }
  auto mulmod = [prime](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % prime);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = powmod(a[rank][c], prime - 2);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mulmod(a[i][c], inv);
      for (std::size_t j = c; j < m.cols(); ++j)
        a[i][j] = (a[i][j] + prime - mulmod(f, a[rank][j])) % prime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace va
