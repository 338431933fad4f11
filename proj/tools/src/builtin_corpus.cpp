#include "va_cli/corpus.hpp"

namespace va::cli {

namespace {

constexpr std::string_view kCorpus = R"corpus(
# Built-in corpus. Keys are documented in va_cli/corpus.hpp.
# provenance: reported = value stated in the literature,
#             derived  = recomputed independently (sympy / by hand),
#             identity = immediate from the definitions.

name: fermat-3-3
n: 3
d: 3
poly: x^3 + y^3 + z^3
verdict: false
condition_I: 3
condition_II: nonempty
witness: x
inverse_system: y1*y2*y3
singular_points: 0
provenance: reported
source: Fermat cubic, x^2 lies in the Jacobian ideal

name: fermat-3-4
n: 3
d: 4
poly: x^4 + y^4 + z^4
verdict: false
condition_I: 3
condition_II: nonempty
witness: x
inverse_system: y1^2*y2^2*y3^2
provenance: reported
source: Fermat hypersurfaces are never Veronese-avoiding

name: fermat-4-3
n: 4
d: 3
poly: x1^3 + x2^3 + x3^3 + x4^3
verdict: false
condition_I: 4
condition_II: nonempty
witness: x1
inverse_system: y1*y2*y3*y4
provenance: reported
source: Fermat hypersurfaces are never Veronese-avoiding

name: family-f3
n: 3
d: 3
poly: x*y*z + x^3 + y^3
verdict: true
condition_I: 3
condition_II: empty
singular_points: 1
nodes: 1
general_position: true
predicted: true
provenance: reported
source: one-node family xyz^(d-2) + x^d + y^d, avoiding iff d = 3

name: family-f4
n: 3
d: 4
poly: x*y*z^2 + x^4 + y^4
verdict: false
condition_I: 3
condition_II: nonempty
witness: x
singular_points: 1
nodes: 1
predicted: false
provenance: reported
source: one-node family; the fixed search order finds x before y (symmetric)

name: family-f5
n: 3
d: 5
poly: x*y*z^3 + x^5 + y^5
verdict: false
condition_I: 3
witness: x
singular_points: 1
nodes: 1
predicted: false
provenance: reported
source: one-node family

name: family-f6
n: 3
d: 6
poly: x*y*z^4 + x^6 + y^6
verdict: false
condition_I: 3
witness: x
singular_points: 1
nodes: 1
predicted: false
provenance: reported
source: one-node family

name: one-node-g4
n: 3
d: 4
poly: x*y*z^2 + x^4 + y^4 + x^3*z
verdict: true
condition_I: 3
condition_II: empty
singular_points: 1
nodes: 1
predicted: true
provenance: reported
source: one-node family xyz^(d-2) + x^d + y^d + x^(d-1)z

name: one-node-g5
n: 3
d: 5
poly: x*y*z^3 + x^5 + y^5 + x^4*z
verdict: true
condition_I: 3
condition_II: empty
singular_points: 1
nodes: 1
predicted: true
provenance: reported
source: one-node family xyz^(d-2) + x^d + y^d + x^(d-1)z

name: hesse-2
n: 3
d: 3
poly: x^3 + y^3 + z^3 - 6*x*y*z
verdict: true
condition_II: empty
inverse_system: 2*(y1^3 + y2^3 + y3^3) + 6*y1*y2*y3
provenance: reported
source: Hesse pencil, lambda = 2

name: hesse-3
n: 3
d: 3
poly: x^3 + y^3 + z^3 - 9*x*y*z
verdict: true
condition_II: empty
inverse_system: 3*(y1^3 + y2^3 + y3^3) + 6*y1*y2*y3
provenance: reported
source: Hesse pencil, lambda = 3

name: hesse-minus-1
n: 3
d: 3
poly: x^3 + y^3 + z^3 + 3*x*y*z
verdict: true
condition_II: empty
inverse_system: -(y1^3 + y2^3 + y3^3) + 6*y1*y2*y3
provenance: reported
source: Hesse pencil, lambda = -1

name: hesse-0
n: 3
d: 3
poly: x^3 + y^3 + z^3
verdict: false
inverse_system: 6*y1*y2*y3
provenance: reported
source: Hesse pencil, lambda = 0 (dual form singular)

name: hesse-minus-2
n: 3
d: 3
poly: x^3 + y^3 + z^3 + 6*x*y*z
verdict: false
condition_II: nonempty
inverse_system: -2*(y1^3 + y2^3 + y3^3) + 6*y1*y2*y3
provenance: reported
source: Hesse pencil, lambda^3 = -8 (dual form singular)

name: symmetric-quartic
n: 3
d: 4
poly: x^4 + y^4 + z^4 + 4*x*y*z*(x + y + z)
verdict: true
condition_I: 3
condition_II: empty
inverse_system: 6*(y1+y2+y3)^6 - 30*(y1+y2+y3)^4*(y1*y2+y1*y3+y2*y3) - 180*(y1+y2+y3)^3*y1*y2*y3 + 105*(y1+y2+y3)^2*(y1*y2+y1*y3+y2*y3)^2 + 510*(y1+y2+y3)*(y1*y2+y1*y3+y2*y3)*y1*y2*y3 - 190*(y1*y2+y1*y3+y2*y3)^3 - 165*(y1*y2*y3)^2
singular_points: 0
provenance: reported
source: symmetric quartic with sextic dual form in s1, s2, s3

name: cubic-triangle
n: 3
d: 3
poly: x*y*z
verdict: true
condition_I: 3
condition_II: empty
singular_points: 3
nodes: 3
general_position: true
predicted: true
provenance: reported
source: plane cubics, three lines in general position

name: cubic-conic-line
n: 3
d: 3
poly: z*(x*y - z^2)
verdict: true
condition_II: empty
singular_points: 2
nodes: 2
general_position: true
predicted: true
provenance: reported
source: plane cubics, conic plus a secant line

name: cubic-cusp
n: 3
d: 3
poly: z*y^2 - x^3
verdict: false
singular_points: 1
nodes: 0
predicted: false
provenance: derived
source: plane cubics, cuspidal cubic; local algebra k[x,y]/(y, x^2)

name: auxiliary-3-3
n: 3
d: 3
poly: x*y*z
verdict: true
singular_points: 3
nodes: 3
general_position: true
predicted: true
provenance: reported
source: auxiliary nodal form, coordinate points are ordinary nodes

name: auxiliary-3-4
n: 3
d: 4
poly: 2*(x^2*y^2 + x^2*z^2 + y^2*z^2)
verdict: true
condition_II: empty
singular_points: 3
nodes: 3
general_position: true
predicted: true
provenance: derived
source: auxiliary nodal form with d = 4 substituted

name: auxiliary-4-3
n: 4
d: 3
poly: x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4
verdict: true
condition_I: 4
condition_II: empty
singular_points: 4
nodes: 4
general_position: true
predicted: true
provenance: reported
source: auxiliary nodal form, coordinate points are ordinary nodes

name: non-isolated
n: 3
poly: x^2*y*z
scope_error: NonIsolatedSingularities
provenance: derived
source: singular along the line x = 0
)corpus";

}  // namespace

std::string_view builtin_corpus_text() { return kCorpus; }

}  // namespace va::cli
