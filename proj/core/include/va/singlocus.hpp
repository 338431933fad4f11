#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "va/milnor.hpp"
#include "va/polynomial.hpp"

namespace va {

/// Point of P^{n-1}, scaled so its last nonzero coordinate is 1.
class ProjPoint {
 public:
  explicit ProjPoint(VectorQ coords);
  const VectorQ& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  /// Index of the last nonzero coordinate.
  std::size_t chart() const;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  VectorQ coords_;
};

std::string to_string(const ProjPoint& p);

struct LocalSingularity {
  ProjPoint point;
  long tjurina = 0;
  long milnor = 0;
  bool is_node = false;
  std::size_t quadratic_rank = 0;
};

struct RationalSingularPoints {
  std::vector<ProjPoint> points;
  /// No irrational singular point exists.
  bool complete = true;
};

struct SingularReport {
  std::vector<LocalSingularity> points;
  bool complete = true;
  long total_tjurina_local = 0;
};

/// Rational points of V(J^sat).
RationalSingularPoints singular_points_rational(const JacobianAnalysis& a);

/// Local Tjurina and Milnor numbers, node test and quadratic rank at a
/// singular point. Throws PreconditionError if p is not singular and
/// DefectError if the local colength does not stabilize.
LocalSingularity local_invariants(const Polynomial& f, const ProjPoint& p);

SingularReport singular_report(const JacobianAnalysis& a);

struct LinearPosition {
  bool independent = false;
  long defect = 0;  ///< |Gamma| - n + dim I(Gamma)_1
  std::size_t rank = 0;
};
LinearPosition general_linear_position(const std::vector<ProjPoint>& points);

enum class ClassificationCase { PlaneCubic, NNodes, FewNodes, Outside, Incomplete, Smooth };
const char* to_string(ClassificationCase c);

struct Classification {
  /// Every case whose hypotheses hold, in dispatch order.
  std::vector<ClassificationCase> applicable;
  std::optional<bool> predicted_va;
  std::string note;
};

Classification classify(const JacobianAnalysis& a, const SingularReport& report);
Classification classify(const JacobianAnalysis& a);

}  // namespace va
