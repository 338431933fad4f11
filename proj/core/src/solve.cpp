#include <algorithm>
#include <map>
#include <set>

#include "va/error.hpp"
#include "va/groebner.hpp"

namespace va {

namespace {

// Pollard-Brent split of a composite; returns a nontrivial factor.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    const std::size_t m = 128;
    auto f = [&](const Integer& v) {
      Integer out = (v * v + c) % n;
      return out;
    };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  n = abs(n);
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  std::vector<Integer> stack{n};
  while (!stack.empty()) {
    Integer v = stack.back();
    stack.pop_back();
    if (v == 1) continue;
    if (mpz_probab_prime_p(v.get_mpz_t(), 30)) {
      ++out[v];
      continue;
    }
    Integer d = pollard_brent(v);
    stack.push_back(d);
    stack.push_back(v / d);
  }
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, unsigned> fac;
  factor_into(n, fac);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Dense coefficients, index = power.
std::vector<Rational> dense(const Polynomial& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& t : p.terms()) c[t.mono[0]] = t.coeff;
  return c;
}

Rational eval_dense(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Synthetic division by (t - r); requires r to be a root.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = carry * r + c[i];
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& univariate) {
  if (univariate.nvars() != 1) throw PreconditionError("rational_roots: polynomial is not univariate");
  if (univariate.is_zero()) throw PreconditionError("rational_roots: zero polynomial");
  RationalRoots out;
  std::vector<Rational> c = dense(univariate.primitive());
  const std::size_t degree = c.size() - 1;
  std::size_t found = 0;
  unsigned zero_mult = 0;
  while (c.size() > 1 && sgn(c[0]) == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult) {
    out.roots.push_back({Rational(0), zero_mult});
    found += zero_mult;
  }
  if (c.size() > 1) {
    const Integer a0 = c.front().get_num(), an = c.back().get_num();
    std::set<Rational> candidates;
    const auto ps = divisors(a0), qs = divisors(an);
    for (const auto& p : ps)
      for (const auto& q : qs) {
        Rational r(p, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates) {
      unsigned mult = 0;
      while (c.size() > 1 && sgn(eval_dense(c, r)) == 0) {
        c = deflate(c, r);
        ++mult;
      }
      if (mult) {
        out.roots.push_back({r, mult});
        found += mult;
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.splits = found == degree;
  return out;
}

VectorQ normalize_projective(VectorQ p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) == 0) continue;
    const Rational s = p[i];
    for (auto& x : p) x /= s;
    return p;
  }
  throw PreconditionError("normalize_projective: zero vector");
}

namespace {

struct AffineResult {
  std::vector<VectorQ> points;
  bool complete = true;
  bool positive_dimensional = false;
};

// Substitutes a rational value for variable `var` and drops it from the ring.
Polynomial specialize(const Polynomial& p, std::size_t var, const Rational& value) {
  const std::size_t n = p.nvars();
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    for (unsigned k = 0; k < t.mono[var]; ++k) c *= value;
    Monomial m;
    for (std::size_t j = 0, out = 0; j < n; ++j) {
      if (j == var) continue;
      if (t.mono[j]) m.set(out, t.mono[j]);
      ++out;
    }
    terms.push_back({m, c});
  }
  return Polynomial(std::max<std::size_t>(n - 1, 1), std::move(terms));
}

bool all_constant_zero(std::span<const Polynomial> gens) {
  for (const auto& g : gens) {
    if (g.degree() > 0) return false;
    if (!g.is_zero()) return false;
  }
  return true;
}

// Rational solutions of an affine system in `vars` variables (the ring of
// each polynomial may carry one dummy variable when vars == 0). The
// eliminant is taken in the first variable; solving proceeds x1, x2, ....
AffineResult solve_affine(std::vector<Polynomial> gens, std::size_t vars, const GroebnerConfig& config) {
  AffineResult res;
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (vars == 0) {
    // Only constants remain.
    const bool ok = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); });
    if (ok) res.points.push_back({});
    return res;
  }
  if (gens.empty()) {
    res.positive_dimensional = true;
    res.complete = false;
    return res;
  }
  // Lex with priority reversed: x_vars > ... > x_1, so the univariate
  // eliminant lives in x_1.
  std::vector<std::size_t> rev(vars);
  for (std::size_t j = 0; j < vars; ++j) rev[j] = vars - 1 - j;
  std::vector<Polynomial> reversed;
  for (const auto& g : gens) reversed.push_back(g.remap(vars, rev));
  const GroebnerBasis gb = buchberger(std::span<const Polynomial>(reversed), MonomialOrder::lex(), config);
  if (gb.is_unit()) return res;
  std::vector<Polynomial> back;
  for (const auto& g : gb.generators()) back.push_back(g.remap(vars, rev));

  const Polynomial* eliminant = nullptr;
  for (const auto& g : back) {
    const bool univariate = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      return t.mono.degree() == t.mono[0];
    });
    if (univariate && g.degree() > 0 && (!eliminant || g.degree() < eliminant->degree())) eliminant = &g;
  }
  if (!eliminant) {
    res.positive_dimensional = true;
    res.complete = false;
    return res;
  }
  std::vector<std::size_t> to_one(vars, 0);
  const Polynomial uni = eliminant->remap(1, to_one);
  const RationalRoots roots = rational_roots(uni);
  res.complete = roots.splits;
  for (const auto& [r, mult] : roots.roots) {
    std::vector<Polynomial> sub;
    for (const auto& g : back) sub.push_back(specialize(g, 0, r));
    AffineResult inner;
    if (vars == 1) {
      const bool ok = std::all_of(sub.begin(), sub.end(), [](const Polynomial& g) { return g.is_zero(); });
      if (ok) inner.points.push_back({});
    } else {
      inner = solve_affine(std::move(sub), vars - 1, config);
    }
    res.complete = res.complete && inner.complete;
    res.positive_dimensional = res.positive_dimensional || inner.positive_dimensional;
    for (auto& p : inner.points) {
      VectorQ full{r};
      full.insert(full.end(), p.begin(), p.end());
      res.points.push_back(std::move(full));
    }
  }
  return res;
}

}  // namespace

RationalPointSet rational_projective_points(std::span<const Polynomial> gens, const GroebnerConfig& config) {
  if (gens.empty()) throw PreconditionError("rational_projective_points: no generators");
  const std::size_t n = gens.front().nvars();
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw PreconditionError("rational_projective_points: generators are not homogeneous");
  RationalPointSet out;
  // Chart c: x_c = 1 and x_j = 0 for j > c; free variables x_1..x_{c-1}.
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Polynomial> chart;
    for (const auto& g : gens) {
      Polynomial h = g;
      for (std::size_t j = n; j-- > c + 1;) h = specialize(h, j, 0);
      h = specialize(h, c, 1);
      chart.push_back(std::move(h));
    }
    std::vector<VectorQ> pts;
    if (c == 0) {
      if (all_constant_zero(chart)) pts.push_back({});
    } else {
      AffineResult r = solve_affine(std::move(chart), c, config);
      out.complete = out.complete && r.complete;
      out.positive_dimensional = out.positive_dimensional || r.positive_dimensional;
      pts = std::move(r.points);
    }
    for (auto& p : pts) {
      VectorQ full(n);
      for (std::size_t j = 0; j < c; ++j) full[j] = p[j];
      full[c] = 1;
      out.points.push_back(std::move(full));
    }
  }
  return out;
}

}  // namespace va
