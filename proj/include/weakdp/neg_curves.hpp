#pragma once

#include <optional>
#include <span>
#include <vector>

#include "weakdp/pic_lattice.hpp"
#include "weakdp/surface_builder.hpp"

namespace wdp {

// All integer classes with ((D.D, -K.D)) = ((-1, 1)) resp. ((-2, 0)).
// Finite exactly when K^2 >= 1; members found by exhaustive search over a
// box derived from Cauchy-Schwarz (see enumerate_negative_classes).
struct NegativeClassSet {
    std::vector<DivisorClass> minus_one;
    std::vector<DivisorClass> minus_two;
};

// Complete enumeration by bounded search. Supported whenever K^2 >= 1, i.e.
// n <= 8 on plane blow-ups and n <= 7 on Quadric/F2 blow-ups; throws
// std::invalid_argument outside that range. Output is deterministic
// (lexicographic in the coefficient vectors).
NegativeClassSet enumerate_negative_classes(const LatticeSignature& sig);

// The loop components with negative self-intersection. On a toric surface a
// negative irreducible curve is rigid in its class, hence torus-invariant,
// hence a boundary (= loop) component; verify_loop_contains_all_negatives
// re-certifies this on the lattice side.
std::vector<CurveRecord> negative_curves(const SurfaceModel& model);

// Non-negative integer combination of the given loop classes equal to
// target, if one exists. Coefficients of components with self-intersection
// >= -1 are bounded by the -K-degree of the target; the (-2)-part is then
// solved exactly against its negative-definite Gram matrix, so the search is
// complete, not heuristic.
std::optional<std::vector<int64_t>> decompose_into_loop_classes(
    const DivisorClass& target, std::span<const CurveRecord> loop);

struct LoopCoverage {
    bool ok = false;
    std::optional<DivisorClass> witness;  // first class with no certificate
};

// Lattice-side certificate for "every negative curve lies in the loop":
// each enumerated negative class must either equal a loop class, decompose
// into loop classes (so any irreducible member would have non-negative
// self-intersection, impossible), or pair strictly negatively with some
// loop component (so any irreducible member would coincide with it). A class
// with none of these certificates is returned as a witness.
LoopCoverage verify_loop_coverage(const LatticeSignature& sig,
                                  std::span<const CurveRecord> candidates);
LoopCoverage verify_loop_contains_all_negatives(const SurfaceModel& model);

struct NegativeComponentReport {
    int m = 0;                  // number of negative loop curves
    int e = 0;                  // connected components of their union
    DivisorClass residual;      // D = -K - sum of negative loop curves
    bool d_is_zero = false;
    int64_t pairing = 0;        // D . (sum of negative loop curves)
    bool identity_vacuous = false;  // the D != 0 hypothesis fails
    bool identity_holds = false;    // pairing == 2e (true when vacuous)
};

// Structure of the negative part of the loop and the D . sum(E) = 2e check.
NegativeComponentReport components_and_d_check(const SurfaceModel& model);

}  // namespace wdp
