#include "va/singlocus.hpp"

#include <algorithm>
#include <sstream>

#include "va/error.hpp"
#include "va/veronese.hpp"

namespace va {

ProjPoint::ProjPoint(VectorQ coords) : coords_(normalize_projective(std::move(coords))) {}

std::size_t ProjPoint::chart() const {
  for (std::size_t i = coords_.size(); i-- > 0;)
    if (sgn(coords_[i]) != 0) return i;
  throw PreconditionError("ProjPoint: zero vector");
}

std::string to_string(const ProjPoint& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ":" : "") << p.coords()[i].get_str();
  os << ']';
  return os.str();
}

RationalSingularPoints singular_points_rational(const JacobianAnalysis& a) {
  RationalSingularPoints out;
  if (a.smooth()) return out;
  const auto& gens = a.saturation().generators();
  const RationalPointSet pts = rational_projective_points(std::span<const Polynomial>(gens), a.config());
  out.complete = pts.complete && !pts.positive_dimensional;
  for (const auto& p : pts.points) {
    ProjPoint q(p);
    if (std::find(out.points.begin(), out.points.end(), q) == out.points.end()) out.points.push_back(std::move(q));
  }
  return out;
}

namespace {

// f with x_c = 1 and x_j = p_j + y_k for j != c, in n - 1 variables y.
Polynomial localize(const Polynomial& f, const ProjPoint& p) {
  const std::size_t n = f.nvars(), c = p.chart(), m = n - 1;
  std::vector<Polynomial> images;
  for (std::size_t j = 0, k = 0; j < n; ++j) {
    if (j == c) {
      images.emplace_back(m, Rational(1));
      continue;
    }
    images.push_back(Polynomial::variable(m, k++) + Polynomial(m, p.coords()[j]));
  }
  Polynomial out(m);
  for (const auto& t : f.terms()) {
    Polynomial term(m, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) term = term * images[i].pow(t.mono[i]);
    out += term;
  }
  return out;
}

// dim k[y]/(I + m^N), stabilized in N.
long local_colength(const std::vector<Polynomial>& gens, std::size_t m) {
  long prev = -1;
  for (unsigned N = 2; N <= 40; ++N) {
    std::vector<Polynomial> all = gens;
    for (const auto& mono : graded_basis(m, N)) all.push_back(Polynomial::monomial(m, mono));
    const GroebnerBasis gb = buchberger(std::span<const Polynomial>(all));
    long dim = 0;
    for (unsigned k = 0; k < N; ++k) dim += hilbert_value(gb, k);
    if (dim == prev) return dim;
    prev = dim;
  }
  throw DefectError("local_colength: no stabilization up to m^40");
}

}  // namespace

LocalSingularity local_invariants(const Polynomial& f, const ProjPoint& p) {
  if (p.size() != f.nvars()) throw PreconditionError("local_invariants: point dimension mismatch");
  const std::size_t m = f.nvars() - 1;
  const Polynomial F = localize(f, p);
  const VectorQ origin(m);
  const auto grad = gradient(F);
  if (sgn(F.evaluate(origin)) != 0) throw PreconditionError("local_invariants: point is not on the hypersurface");
  for (const auto& g : grad)
    if (sgn(g.evaluate(origin)) != 0) throw PreconditionError("local_invariants: point is not singular");

  MatrixQ hess(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) hess(i, j) = partial_derivative(grad[i], j).evaluate(origin);

  LocalSingularity s{p};
  s.quadratic_rank = rank(hess);
  std::vector<Polynomial> tj = grad;
  tj.push_back(F);
  s.tjurina = local_colength(tj, m);
  s.milnor = local_colength(grad, m);
  s.is_node = s.tjurina == 1;
  return s;
}

SingularReport singular_report(const JacobianAnalysis& a) {
  SingularReport rep;
  const auto pts = singular_points_rational(a);
  rep.complete = pts.complete;
  for (const auto& p : pts.points) {
    rep.points.push_back(local_invariants(a.f(), p));
    rep.total_tjurina_local += rep.points.back().tjurina;
  }
  return rep;
}

LinearPosition general_linear_position(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw PreconditionError("general_linear_position: no points");
  MatrixQ m(0, points.front().size());
  for (const auto& p : points) m.append_row(p.coords());
  LinearPosition out;
  out.rank = rank(m);
  const long g = static_cast<long>(points.size()), n = static_cast<long>(m.cols());
  out.defect = g - n + (n - static_cast<long>(out.rank));
  out.independent = out.defect == 0;
  return out;
}

const char* to_string(ClassificationCase c) {
  switch (c) {
    case ClassificationCase::PlaneCubic: return "plane_cubic";
    case ClassificationCase::NNodes: return "n_points_general_position";
    case ClassificationCase::FewNodes: return "fewer_than_n_nodes";
    case ClassificationCase::Outside: return "outside_classified_range";
    case ClassificationCase::Incomplete: return "incomplete";
    case ClassificationCase::Smooth: return "smooth";
  }
  return "unknown";
}

Classification classify(const JacobianAnalysis& a, const SingularReport& report) {
  Classification c;
  if (a.smooth()) {
    c.applicable.push_back(ClassificationCase::Smooth);
    c.note = "smooth input, no singular classification";
    return c;
  }
  if (!report.complete) {
    c.applicable.push_back(ClassificationCase::Incomplete);
    c.note = "no prediction, incomplete: irrational singular points exist";
    return c;
  }
  const std::size_t n = a.n(), r = report.points.size();
  const bool all_nodes =
      std::all_of(report.points.begin(), report.points.end(), [](const LocalSingularity& s) { return s.is_node; });
  std::vector<ProjPoint> pts;
  for (const auto& s : report.points) pts.push_back(s.point);
  const bool independent = r > 0 && general_linear_position(pts).independent;

  auto predict = [&](ClassificationCase k, bool v) {
    c.applicable.push_back(k);
    if (!c.predicted_va) {
      c.predicted_va = v;
    } else if (*c.predicted_va != v) {
      throw DefectError("classify: applicable cases disagree");
    }
  };
  if (n == 3 && a.d() == 3) predict(ClassificationCase::PlaneCubic, all_nodes);
  if (r == n) predict(ClassificationCase::NNodes, all_nodes && independent);
  if (r < n && all_nodes && independent) {
    std::vector<VectorQ> coords;
    for (const auto& p : pts) coords.push_back(p.coords());
    predict(ClassificationCase::FewNodes, phi_base_locus(a, coords).empty);
  }
  if (c.applicable.empty()) {
    c.applicable.push_back(ClassificationCase::Outside);
    c.note = "outside classified range";
  }
  return c;
}

Classification classify(const JacobianAnalysis& a) { return classify(a, singular_report(a)); }

}  // namespace va
