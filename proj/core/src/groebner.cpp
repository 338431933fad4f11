#include "va/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "va/error.hpp"

namespace va {

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Grlex: return "grlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::BlockElimination: return "block-elimination";
  }
  return "unknown";
}

int default_degree_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("VA_DEGREE_CAP")) {
      try {
        const int v = std::stoi(env);
        if (v > 0) return v;
      } catch (const std::exception&) {
      }
    }
    return 60;
  }();
  return cap;
}

namespace {

std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

unsigned block_degree(const Monomial& m, std::size_t lo, std::size_t hi) noexcept {
  unsigned d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m[i];
  return d;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
  switch (kind) {
    case OrderKind::Grevlex:
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      return revlex_tail(a, b, 0, nvars);
    case OrderKind::Grlex:
      return grlex_compare(a, b);
    case OrderKind::Lex:
      return a.exponents() <=> b.exponents();
    case OrderKind::BlockElimination: {
      const std::size_t k = std::min(block, nvars);
      if (auto c = block_degree(a, 0, k) <=> block_degree(b, 0, k); c != 0) return c;
      if (auto c = revlex_tail(a, b, 0, k); c != 0) return c;
      if (auto c = block_degree(a, k, nvars) <=> block_degree(b, k, nvars); c != 0) return c;
      return revlex_tail(a, b, k, nvars);
    }
  }
  return std::strong_ordering::equal;
}

namespace {

struct OrderCmp {
  MonomialOrder order;
  std::size_t nvars;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return order.compare(a, b, nvars) == std::strong_ordering::greater;
  }
};

IntPoly to_intpoly(const Polynomial& f, const OrderCmp& cmp, Integer* scale = nullptr) {
  Integer l = 1;
  for (const auto& t : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  IntPoly p;
  p.reserve(f.size());
  for (const auto& t : f.terms()) p.push_back({t.mono, t.coeff.get_num() * (l / t.coeff.get_den())});
  std::sort(p.begin(), p.end(), [&](const IntTerm& a, const IntTerm& b) { return cmp.greater(a.mono, b.mono); });
  if (scale) *scale = l;
  return p;
}

Polynomial to_polynomial(const IntPoly& p, std::size_t nvars, const Rational& divisor = 1) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) {
    Rational c(t.coeff);
    c /= divisor;
    terms.push_back({t.mono, c});
  }
  return Polynomial(nvars, std::move(terms));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (sgn(p.front().coeff) < 0) g = -g;
  if (g == 1) return;
  for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

// Returns ca * a[ao..] - cb * m * b[bo..].
IntPoly combine(const IntPoly& a, std::size_t ao, const Integer& ca, const IntPoly& b, std::size_t bo,
                const Integer& cb, const Monomial& m, const OrderCmp& cmp) {
  IntPoly out;
  out.reserve((a.size() - ao) + (b.size() - bo));
  std::size_t i = ao, j = bo;
  Monomial mb;
  bool have_mb = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_mb) {
      mb = b[j].mono * m;
      have_mb = true;
    }
    if (j == b.size() || (i < a.size() && cmp.greater(a[i].mono, mb))) {
      out.push_back({a[i].mono, ca * a[i].coeff});
      ++i;
    } else if (i == a.size() || cmp.greater(mb, a[i].mono)) {
      out.push_back({mb, -(cb * b[j].coeff)});
      ++j;
      have_mb = false;
    } else {
      Integer c = ca * a[i].coeff - cb * b[j].coeff;
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
      have_mb = false;
    }
  }
  return out;
}

const IntPoly* find_reducer(const Monomial& m, const std::vector<const IntPoly*>& reducers) {
  for (const IntPoly* g : reducers)
    if (g->front().mono.divides(m)) return g;
  return nullptr;
}

// Reduces h modulo the reducers. The result r satisfies r = mult * h modulo
// the ideal, with `mult` a nonzero rational accumulated in `*mult` when given.
IntPoly reduce(IntPoly h, const std::vector<const IntPoly*>& reducers, const OrderCmp& cmp, bool full,
               Rational* mult = nullptr) {
  IntPoly r;
  std::size_t off = 0;
  unsigned steps = 0;
  while (off < h.size()) {
    const IntPoly* g = find_reducer(h[off].mono, reducers);
    if (!g) {
      if (!full) break;
      r.push_back(std::move(h[off]));
      ++off;
      continue;
    }
    const Integer& a = h[off].coeff;
    const Integer& b = g->front().coeff;
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer ca = b / gg, cb = a / gg;
    if (sgn(ca) < 0) {
      ca = -ca;
      cb = -cb;
    }
    const Monomial q = h[off].mono.quotient(g->front().mono);
    h = combine(h, off + 1, ca, *g, 1, cb, q, cmp);
    off = 0;
    if (ca != 1) {
      for (auto& t : r) t.coeff *= ca;
      if (mult) *mult *= ca;
    }
    if (++steps % 8 == 0) {
      Integer g2 = content(h);
      for (const auto& t : r) {
        if (g2 == 1) break;
        mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), t.coeff.get_mpz_t());
      }
      if (g2 > 1) {
        for (auto& t : h) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g2.get_mpz_t());
        for (auto& t : r) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g2.get_mpz_t());
        if (mult) *mult /= g2;
      }
    }
  }
  if (full) return r;
  if (off == 0) return h;
  return IntPoly(std::make_move_iterator(h.begin() + static_cast<std::ptrdiff_t>(off)),
                 std::make_move_iterator(h.end()));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class BuchbergerEngine {
 public:
  BuchbergerEngine(std::size_t nvars, const MonomialOrder& order, const GroebnerConfig& config)
      : cmp_{order, nvars}, config_(config) {}

  bool unit() const noexcept { return unit_; }

  void add_input(IntPoly h) {
    if (h.empty() || unit_) return;
    h = reduce(std::move(h), active_reducers(), cmp_, true);
    insert(std::move(h));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      const std::size_t k = select_pair();
      const Pair p = pairs_[k];
      pairs_[k] = pairs_.back();
      pairs_.pop_back();
      if (static_cast<int>(p.lcm.degree()) > config_.degree_cap)
        throw DegreeCapExceeded(static_cast<int>(p.lcm.degree()), config_.degree_cap);
      IntPoly s = spoly(p);
      if (s.empty()) continue;
      s = reduce(std::move(s), active_reducers(), cmp_, true);
      insert(std::move(s));
    }
  }

  // Minimal basis with fully reduced tails, primitive, sorted by increasing LM.
  std::vector<IntPoly> reduced_basis() const {
    if (unit_) return {IntPoly{{Monomial{}, Integer(1)}}};
    std::vector<const IntPoly*> act = active_reducers();
    std::sort(act.begin(), act.end(),
              [&](const IntPoly* a, const IntPoly* b) { return cmp_.greater(b->front().mono, a->front().mono); });
    std::vector<IntPoly> out;
    for (const IntPoly* g : act) {
      std::vector<const IntPoly*> others;
      for (const IntPoly* o : act)
        if (o != g) others.push_back(o);
      IntPoly r = reduce(*g, others, cmp_, true);
      make_primitive(r);
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::vector<const IntPoly*> active_reducers() const {
    std::vector<const IntPoly*> r;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) r.push_back(&polys_[i]);
    return r;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const auto c = cmp_.order.compare(a.lcm, b.lcm, cmp_.nvars);
      if (c == std::strong_ordering::less || (c == std::strong_ordering::equal && std::tie(a.j, a.i) < std::tie(b.j, b.i)))
        best = k;
    }
    return best;
  }

  IntPoly spoly(const Pair& p) const {
    const IntPoly& f = polys_[p.i];
    const IntPoly& g = polys_[p.j];
    const Integer& a = f.front().coeff;
    const Integer& b = g.front().coeff;
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Monomial mf = p.lcm.quotient(f.front().mono);
    const Monomial mg = p.lcm.quotient(g.front().mono);
    // (b/gg) * mf * f - (a/gg) * mg * g, leading terms cancel.
    IntPoly fm;
    fm.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) fm.push_back({f[k].mono * mf, f[k].coeff});
    IntPoly s = combine(fm, 0, b / gg, g, 1, a / gg, mg, cmp_);
    make_primitive(s);
    return s;
  }

  void insert(IntPoly h) {
    if (h.empty()) return;
    make_primitive(h);
    if (h.front().mono.is_one()) {
      unit_ = true;
      return;
    }
    const std::size_t hi = polys_.size();
    const Monomial lh = h.front().mono;
    polys_.push_back(std::move(h));
    active_.push_back(true);
    gm_update(hi, lh);
  }

  // Gebauer-Moeller installation of the pairs of a new element.
  void gm_update(std::size_t hi, const Monomial& lh) {
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].front().mono;
      c.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Cand& p = c[k];
      bool keep = p.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (c[q].lcm.divides(p.lcm)) keep = false;
        for (std::size_t q = 0; q < d.size() && keep; ++q)
          if (d[q].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial& li = polys_[p.i].front().mono;
      const Monomial& lj = polys_[p.j].front().mono;
      return !(li.lcm(lh) == p.lcm) && !(lj.lcm(lh) == p.lcm);
    });
    for (const Cand& p : d)
      if (!p.coprime) pairs_.push_back({p.g, hi, p.lcm});
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].front().mono)) active_[g] = false;
  }

  OrderCmp cmp_;
  GroebnerConfig config_;
  std::vector<IntPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(integral_.size());
  for (const auto& p : integral_) out.push_back(p.front().mono);
  return out;
}

bool GroebnerBasis::is_unit() const noexcept {
  return generators_.size() == 1 && generators_.front().size() == 1 &&
         generators_.front().terms().front().mono.is_one();
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, const GroebnerConfig& config) {
  if (gens.empty()) {
    // Zero ideal of an unspecified ring; normal_form is the identity on any ring.
    GroebnerBasis zero(0, order);
    zero.reduced_ = true;
    return zero;
  }
  const std::size_t nvars = gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw PreconditionError("buchberger: generators live in different rings");
  const OrderCmp cmp{order, nvars};
  BuchbergerEngine engine(nvars, order, config);
  for (const auto& g : gens) engine.add_input(to_intpoly(g, cmp));
  engine.run();
  GroebnerBasis gb(nvars, order);
  gb.integral_ = engine.reduced_basis();
  for (const auto& p : gb.integral_) gb.generators_.push_back(to_polynomial(p, nvars, Rational(p.front().coeff)));
  gb.reduced_ = true;
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.nvars() != 0 && f.nvars() != gb.nvars()) throw PreconditionError("normal_form: variable count mismatch");
  if (f.is_zero() || gb.integral_.empty()) return f;
  const OrderCmp cmp{gb.order(), gb.nvars()};
  Integer scale;
  IntPoly h = to_intpoly(f, cmp, &scale);
  std::vector<const IntPoly*> reducers;
  for (const auto& p : gb.integral_) reducers.push_back(&p);
  Rational mult = 1;
  IntPoly r = reduce(std::move(h), reducers, cmp, true, &mult);
  return to_polynomial(r, f.nvars(), mult * Rational(scale));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  for (const auto& g : a.generators())
    if (!ideal_contains(b, g)) return false;
  for (const auto& g : b.generators())
    if (!ideal_contains(a, g)) return false;
  return true;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("leading_monomial: zero polynomial");
  Monomial best = f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best, f.nvars()) == std::strong_ordering::greater) best = t.mono;
  return best;
}

namespace {

void require_homogeneous(const GroebnerBasis& gb, const char* op) {
  for (const auto& g : gb.generators())
    if (!g.is_homogeneous()) throw PreconditionError(std::string(op) + ": ideal is not homogeneous");
}

void require_homogeneous(std::span<const Polynomial> gens, const char* op) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw PreconditionError(std::string(op) + ": generators are not homogeneous");
}

}  // namespace

bool projective_empty(const GroebnerBasis& gb) {
  require_homogeneous(gb, "projective_empty");
  const auto lms = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.nvars(); ++i) {
    const bool found = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.degree() == m[i]; });
    if (!found) return false;
  }
  return true;
}

int krull_dim_quotient(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t n = gb.nvars();
  const auto lms = gb.leading_monomials();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    // Independent set: no leading monomial supported inside the subset.
    const bool independent = std::none_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] && !(mask & (1u << i))) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

int projective_dimension(const GroebnerBasis& gb) {
  require_homogeneous(gb, "projective_dimension");
  return std::max(krull_dim_quotient(gb) - 1, -1);
}

long hilbert_value(const GroebnerBasis& gb, unsigned m) {
  const auto lms = gb.leading_monomials();
  long count = 0;
  for (const auto& mono : graded_basis(gb.nvars(), m)) {
    const bool standard = std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(mono); });
    if (standard) ++count;
  }
  return count;
}

namespace {

// Embeds x_j -> x_{j+1}; the new variable x_0 plays the role of t.
Polynomial shift_up(const Polynomial& p) {
  std::vector<std::size_t> map(p.nvars());
  for (std::size_t j = 0; j < p.nvars(); ++j) map[j] = j + 1;
  return p.remap(p.nvars() + 1, map);
}

std::vector<Polynomial> eliminate_t(const GroebnerBasis& gb, std::size_t nvars, const GroebnerConfig& config) {
  std::vector<Polynomial> kept;
  std::vector<std::size_t> map(nvars + 1, 0);
  for (std::size_t j = 1; j <= nvars; ++j) map[j] = j - 1;
  for (const auto& g : gb.generators()) {
    const bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const Term& t) { return t.mono[0] != 0; });
    if (!has_t) kept.push_back(g.remap(nvars, map));
  }
  (void)config;
  return kept;
}

GroebnerBasis finish(std::vector<Polynomial> gens, std::size_t nvars, const GroebnerConfig& config) {
  if (gens.empty()) return GroebnerBasis(nvars, MonomialOrder::grevlex());
  return buchberger(std::span<const Polynomial>(gens), MonomialOrder::grevlex(), config);
}

}  // namespace

GroebnerBasis saturate_by_variable(std::span<const Polynomial> gens, std::size_t i, const GroebnerConfig& config) {
  if (gens.empty()) throw PreconditionError("saturate_by_variable: no generators");
  const std::size_t n = gens.front().nvars();
  if (n + 1 > kMaxVars) throw PreconditionError("saturate_by_variable: too many variables");
  std::vector<Polynomial> ext;
  for (const auto& g : gens) ext.push_back(shift_up(g));
  // 1 - t * x_i
  Polynomial rel(n + 1, Rational(1));
  rel -= Polynomial::variable(n + 1, 0) * Polynomial::variable(n + 1, i + 1);
  ext.push_back(rel);
  const GroebnerBasis gb = buchberger(std::span<const Polynomial>(ext), MonomialOrder::elimination(1), config);
  return finish(eliminate_t(gb, n, config), n, config);
}

GroebnerBasis intersect(std::span<const Polynomial> a, std::span<const Polynomial> b, const GroebnerConfig& config) {
  if (a.empty() || b.empty()) throw PreconditionError("intersect: empty generator list");
  const std::size_t n = a.front().nvars();
  if (n + 1 > kMaxVars) throw PreconditionError("intersect: too many variables");
  const Polynomial t = Polynomial::variable(n + 1, 0);
  const Polynomial one_minus_t = Polynomial(n + 1, Rational(1)) - t;
  std::vector<Polynomial> ext;
  for (const auto& g : a) ext.push_back(t * shift_up(g));
  for (const auto& g : b) ext.push_back(one_minus_t * shift_up(g));
  const GroebnerBasis gb = buchberger(std::span<const Polynomial>(ext), MonomialOrder::elimination(1), config);
  return finish(eliminate_t(gb, n, config), n, config);
}

GroebnerBasis saturate_irrelevant(std::span<const Polynomial> gens, const GroebnerConfig& config) {
  if (gens.empty()) throw PreconditionError("saturate_irrelevant: no generators");
  require_homogeneous(gens, "saturate_irrelevant");
  const std::size_t n = gens.front().nvars();
  const GroebnerBasis base = buchberger(gens, MonomialOrder::grevlex(), config);
  if (projective_empty(base)) return buchberger({Polynomial(n, Rational(1))}, MonomialOrder::grevlex(), config);
  GroebnerBasis acc = saturate_by_variable(gens, 0, config);
  for (std::size_t i = 1; i < n; ++i) {
    const GroebnerBasis next = saturate_by_variable(gens, i, config);
    if (acc.is_unit()) {
      acc = next;
      continue;
    }
    if (next.is_unit()) continue;
    acc = intersect(acc.generators(), next.generators(), config);
  }
  return acc;
}

namespace {

// Invertible B whose last row is l, so y = B x has y_n = l(x).
MatrixQ coordinates_ending_with(const VectorQ& l) {
  const std::size_t n = l.size();
  std::size_t pivot = n;
  for (std::size_t k = n; k-- > 0;)
    if (sgn(l[k]) != 0) {
      pivot = k;
      break;
    }
  if (pivot == n) throw PreconditionError("saturate_by_linear_form: zero linear form");
  MatrixQ b(n, n);
  for (std::size_t r = 0, k = 0; k < n; ++k) {
    if (k == pivot) continue;
    b(r++, k) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) b(n - 1, k) = l[k];
  return b;
}

Polynomial divide_out_last(const Polynomial& g) {
  const std::size_t last = g.nvars() - 1;
  unsigned k = std::numeric_limits<unsigned>::max();
  for (const auto& t : g.terms()) k = std::min(k, t.mono[last]);
  if (k == 0) return g;
  const Monomial power = Monomial::variable(last, k);
  std::vector<Term> terms;
  for (const auto& t : g.terms()) terms.push_back({t.mono.quotient(power), t.coeff});
  return Polynomial(g.nvars(), std::move(terms));
}

// Deterministic candidate linear forms: coordinates from the last one, then
// forms with small mixed coefficients.
std::vector<VectorQ> saturation_candidates(std::size_t n) {
  std::vector<VectorQ> out;
  for (std::size_t i = n; i-- > 0;) {
    VectorQ e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  for (long s = 1; s <= 8; ++s) {
    VectorQ v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = 1 + static_cast<long>((s * (2 * k + 1) + k * k) % 7);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

GroebnerBasis saturate_by_linear_form(std::span<const Polynomial> gens, const VectorQ& l, const GroebnerConfig& config) {
  if (gens.empty()) throw PreconditionError("saturate_by_linear_form: no generators");
  require_homogeneous(gens, "saturate_by_linear_form");
  const std::size_t n = gens.front().nvars();
  if (l.size() != n) throw PreconditionError("saturate_by_linear_form: linear form has the wrong length");
  const MatrixQ b = coordinates_ending_with(l);
  const MatrixQ b_inv = inverse(b);
  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(substitute_linear(g, b_inv));
  const GroebnerBasis gb = buchberger(std::span<const Polynomial>(moved), MonomialOrder::grevlex(), config);
  std::vector<Polynomial> back;
  for (const auto& g : gb.generators()) back.push_back(substitute_linear(divide_out_last(g), b));
  return finish(std::move(back), n, config);
}

GroebnerBasis saturate_irrelevant_linear(std::span<const Polynomial> gens, const GroebnerConfig& config) {
  if (gens.empty()) throw PreconditionError("saturate_irrelevant_linear: no generators");
  require_homogeneous(gens, "saturate_irrelevant_linear");
  const std::size_t n = gens.front().nvars();
  const GroebnerBasis base = buchberger(gens, MonomialOrder::grevlex(), config);
  if (projective_empty(base)) return buchberger({Polynomial(n, Rational(1))}, MonomialOrder::grevlex(), config);
  if (n < 2) return saturate_irrelevant(gens, config);
  for (const auto& l : saturation_candidates(n)) {
    // l must vanish at no point of V(I): restrict to l = 0 and test emptiness.
    const MatrixQ b_inv = inverse(coordinates_ending_with(l));
    std::vector<std::size_t> drop_last(n);
    for (std::size_t k = 0; k < n; ++k) drop_last[k] = k + 1 < n ? k : 0;
    std::vector<Polynomial> restricted;
    for (const auto& g : gens) {
      Polynomial h = substitute_linear(g, b_inv).substitute(n - 1, Polynomial(n));
      if (!h.is_zero()) restricted.push_back(h.remap(n - 1, drop_last));
    }
    if (restricted.empty()) continue;
    if (!projective_empty(buchberger(std::span<const Polynomial>(restricted), MonomialOrder::grevlex(), config)))
      continue;
    return saturate_by_linear_form(gens, l, config);
  }
  return saturate_irrelevant(gens, config);
}

}  // namespace va
