#pragma once

#include <string>
#include <vector>

#include "weakdp/pic_lattice.hpp"
#include "weakdp/toric_fan.hpp"

namespace wdp {

// Replayable construction recipe: a seed surface and a list of corner
// blow-ups. Corner i addresses the node between loop components i and i+1
// (mod length) in the current cyclic order; the new exceptional curve is
// inserted between them, so later indices refer to the grown loop.
struct BlowupScript {
    Seed seed = Seed::P2;
    std::vector<int> steps;
    std::string name;

    bool operator==(const BlowupScript&) const = default;
};

struct CurveRecord {
    std::string name;
    DivisorClass cls;
    int64_t self_int = 0;
    bool in_loop = true;
};

// One surface carried in both representations at once: the Picard-lattice
// side (loop of curve classes) and the toric side (fan), kept in lockstep so
// loop position i always corresponds to ray i.
class SurfaceModel {
public:
    SurfaceModel(LatticeSignature sig, Fan2D fan, std::vector<CurveRecord> loop,
                 BlowupScript script);

    const LatticeSignature& signature() const { return sig_; }
    const Fan2D& fan() const { return fan_; }
    const std::vector<CurveRecord>& loop() const { return loop_; }
    const BlowupScript& script() const { return script_; }
    int loop_size() const { return static_cast<int>(loop_.size()); }

private:
    LatticeSignature sig_;
    Fan2D fan_;
    std::vector<CurveRecord> loop_;
    BlowupScript script_;
};

// The bare seed surface with its boundary loop.
SurfaceModel seed_model(Seed s);

// One corner blow-up applied to both representations. The two loop
// components at the corner each lose the new exceptional class; the new
// (-1)-record is inserted between them. Throws std::invalid_argument on a
// bad corner index.
SurfaceModel blowup_at(const SurfaceModel& model, int corner);

// Full replay of a script. Errors name the failing step.
SurfaceModel build_from_script(const BlowupScript& script);

// Sum of the loop classes; always -K. A mismatch means the model was
// corrupted and throws std::logic_error.
DivisorClass loop_divisor(const SurfaceModel& model);

// Self-intersections of the loop components, in loop order.
LabelCycle dual_graph_cycle(const SurfaceModel& model);

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Consistency of the paired representations: lattice labels match fan
// labels position by position, K^2 agrees between the two sides, the loop
// sums to -K, and the loop is simple (adjacent components meet once,
// non-adjacent ones not at all).
ValidationReport cross_validate(const SurfaceModel& model);

}  // namespace wdp
