#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weakdp/int_linalg.hpp"
#include "weakdp/surface_builder.hpp"

namespace wdp {

// A surface self-map acting as multiplication by d on the Picard group:
// degree d^2, pullback matrix d * Id (stored as an explicit matrix so the
// two construction routes - toric multiplication and step-by-step lifting -
// can be compared entry by entry).
class Endomorphism {
public:
    Endomorphism(SurfaceModel surface, int64_t multiplier, IntMatrix pullback, int64_t degree);

    const SurfaceModel& surface() const { return surface_; }
    int64_t multiplier() const { return d_; }
    int64_t degree() const { return degree_; }
    const IntMatrix& pullback_matrix() const { return pullback_; }

    DivisorClass pullback(const DivisorClass& c) const;

private:
    SurfaceModel surface_;
    int64_t d_;
    IntMatrix pullback_;
    int64_t degree_;
};

// The endomorphism induced by multiplication by d on the cocharacter
// lattice: every cone maps to itself, every boundary divisor pulls back to
// d times itself, and the degree is the determinant of the lattice map. The
// pullback matrix is assembled from the boundary classes (which span the
// Picard group), not hard-coded.
Endomorphism mult_endomorphism(const SurfaceModel& model, int64_t d);

// Lift through the blow-up of a loop node: the node is torus-fixed, its two
// branches are loop curves with pullback d * itself, so the lift exists with
// the same d and the new exceptional curve satisfies f*E = dE.
Endomorphism lift_through_blowup(const Endomorphism& e, int corner);

// Exact decomposition K - f*K = (d-1) * sum(E_i) + Z with Z = (d-1) * sum(P_j),
// E_i the negative and P_j the non-negative loop components.
struct RamificationLedger {
    int64_t d = 1;
    std::vector<std::pair<std::string, int64_t>> branch_terms;  // E_i -> d-1
    DivisorClass z_class;
    DivisorClass ramification_class;  // K - f*K
};

RamificationLedger ramification_ledger(const Endomorphism& e);

// The coordinate power map [X:Y:Z] -> [X^d:Y^d:Z^d], kept symbolic on
// monomial exponents.
class PowerMap {
public:
    explicit PowerMap(int64_t d);

    int64_t multiplier() const { return d_; }
    int64_t degree() const { return d_ * d_; }

    // Exponent vector of X_i composed with the map (i is 0-based).
    std::array<int64_t, 3> pull_coordinate(int i) const;

    // Indices of coordinates forced to vanish on the preimage of the i-th
    // coordinate point; the preimage is the point itself.
    std::vector<int> preimage_of_point(int i) const;

private:
    int64_t d_;
};

struct LinePullback {
    int line_index = 1;          // 1-based, matching V(X), V(Y), V(Z)
    int64_t multiplicity = 1;
};

// f*(V(X_i)) = d * V(X_i), read off the monomial X_i^d.
LinePullback power_map_pullback(int line_index, int64_t d);

// K = f*K + (d-1) * sum(L_i) on the plane, as H-coefficients:
// -3 = -3d + 3(d-1). Returns both sides for the caller to compare.
std::pair<int64_t, int64_t> power_map_canonical_identity(int64_t d);

}  // namespace wdp
