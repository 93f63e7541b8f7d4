#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewnomial/arrangement.hpp"
#include "fewnomial/bounds.hpp"
#include "fewnomial/gale.hpp"
#include "fewnomial/master.hpp"

namespace fewnomial {

/// Numeric policy for the curve-tracing solver. Defaults are the certified
/// operating point; loosening them voids the ledger comparisons.
struct SolverOptions {
  double corrector_tol = 1e-12;   // residual target of the on-curve corrector
  double init_step_rel = 1e-3;    // first predictor step, relative to scale
  double max_step_rel = 0.1;      // step ceiling, relative to scale
  double min_step = 1e-12;        // below this the arc is abandoned
  long max_steps = 1000000;       // per arc, both directions combined
  double guard_rel = 1e-9;        // near-hyperplane stop, relative to scale
  double squeeze_rel = 1e-13;     // endpoint sign refinement pushes this close
  double seed_offset_rel = 1e-6;  // distance seeds step off faces and vertices
  double newton_tol = 1e-10;      // max |psi_j| accepted after polish
  double degen_tol = 1e-8;        // minimum singular value of a counted zero
  double dedupe_tol = 1e-9;       // relative spacing below which zeros merge
  double infinity_rel = 400.0;    // trace radius treated as the infinite end
  double perturb_rel = 1e-6;      // relative size of the genericity repair
  int max_repairs = 3;            // perturbation retries on genericity failures
  std::uint64_t seed = 0;         // drives the repair perturbation only
};

using Point2 = std::array<double, 2>;

/// Why a traced arc stopped on one side.
enum class EndKind { face, vertex, infinity, loop };

struct ArcEnd {
  EndKind kind = EndKind::loop;
  std::vector<int> members;  // vanishing forms at a face or vertex end
  Point2 at{};               // endpoint (face/vertex) or direction (infinity)
};

/// One traced connected piece of a curve, sampled as a polyline.
struct Arc {
  std::vector<Point2> samples;
  ArcEnd head, tail;
  bool closed = false;
};

/// Trace record for one curve of the descending chain, with the zeros of the
/// next function collected along it.
struct CurveTrace {
  int level = 0;  // 1 for the Jacobian curve, 2 for the psi_1 level set
  std::vector<Arc> arcs;
  int flat = 0;  // arcs with two ends on faces or at infinity
  std::vector<std::vector<double>> marks;  // zeros of the next function, deduped
};

/// Zeros of the cleared Jacobian chain inside the arrangement complement.
struct GammaZeros {
  int count = 0;
  std::vector<std::vector<double>> points;
  int suspects = 0;  // boxes neither certified nor excluded
};

struct MasterSolution {
  std::vector<double> y;
  double residual = 0;   // max_j |psi_j|
  double sigma_min = 0;  // smallest singular value of the psi Jacobian
  std::vector<int> signs;  // form signs, the chamber fingerprint
};

/// Everything the tracing pass measured, with the budget it must respect.
struct SolutionSet {
  int n = 0, k = 0;
  std::vector<MasterSolution> solutions;
  std::vector<MasterSolution> degenerate_suspects;
  GammaZeros gamma;
  std::vector<CurveTrace> traces;      // level 1 first
  std::vector<int> flat_observed;      // per level
  bool verified = true;                // false once any arc or count is in doubt
  std::vector<std::string> notes;      // reasons verification degraded

  int observed_budget() const;  // gamma count + sum of observed flats
};

/// Zeros of the last chain polynomial system inside the complement; exact via
/// resultants and Krawczyk certification, boxes shrunk off the arrangement.
/// Zeros forced onto a line by a vanishing first-column weight are clearing
/// artifacts, not census members, and are dropped.
GammaZeros solve_gamma_system(const MasterSystem& ms, const GammaChain& chain,
                              const Arrangement& a, const SolverOptions& opt = {});

/// Points where curve arcs can end on codimension-j faces: restrictions of the
/// leading chain polynomials solved exactly for j < k, sign-filtered vertices
/// for j = k. Each finite start carries one seed per incident side.
struct BoundaryStart {
  std::vector<int> members;    // vanishing forms; infinity_index for the far face
  Point2 at{};                 // point on the face, or direction at infinity
  std::vector<Point2> seeds;   // offsets into the complement
};
std::vector<BoundaryStart> boundary_starts(const MasterSystem& ms, const GammaChain& chain,
                                           const Arrangement& a, int j,
                                           const SolverOptions& opt = {});

/// One full arc traced out of a seed by predictor-corrector continuation, with
/// the bracketed sign changes of the watched psi along it. Level 1 follows the
/// cleared Jacobian curve, level 2 the psi_1 level set.
struct TraceOutcome {
  Arc arc;
  std::vector<std::pair<Point2, Point2>> brackets;
  bool ok = true;
  std::string note;
};
TraceOutcome trace_curve(const MasterSystem& ms, const GammaChain& chain, int level,
                         const Point2& seed, const SolverOptions& opt = {});

/// Master zeros by descending the chain: gamma zeros seed the Jacobian curve,
/// its psi_1 sign changes seed the psi_1 level set, whose psi_2 sign changes
/// are the candidates. k = 1 degenerates to monotone interval bisection.
SolutionSet solve_master(const MasterSystem& ms, const SolverOptions& opt = {});

struct SparseSolution {
  std::vector<double> x;
  double residual = 0;  // max |f_i(x)| over the equations
};

/// Sparse solve through the dual: master zeros filtered by the sign parity
/// p(y)^B > 0, then lifted back to the torus.
struct SparseSolveReport {
  SparseSystem solved;   // the system the counts refer to
  bool perturbed = false;
  GaleDual dual;
  SolutionSet master;
  std::vector<SparseSolution> solutions;
  std::vector<SparseSolution> positive;  // subset in the positive orthant
  bool verified = true;
};

SparseSolveReport solve_sparse(const SparseSystem& s, const SolverOptions& opt = {});

}  // namespace fewnomial
