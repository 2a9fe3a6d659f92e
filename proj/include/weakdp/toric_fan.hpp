#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wdp {

// Minimal toric seeds. Any larger Hirzebruch surface F_s (s >= 3) carries a
// boundary label -s <= -3, and corner blow-ups only ever decrement existing
// labels, so such a label can never re-enter {-2,-1,0,1}; those seeds are
// provably dead for this enumeration and are excluded.
enum class Seed { P2, F0, F1, F2 };

std::string_view seed_name(Seed s);
Seed parse_seed(std::string_view name);  // throws std::invalid_argument

struct RayVec {
    int64_t x = 0;
    int64_t y = 0;
    bool operator==(const RayVec&) const = default;
};

// Cyclic sequence of boundary self-intersection numbers (the dual graph of
// the anticanonical loop, drawn as a labeled cycle).
class LabelCycle {
public:
    explicit LabelCycle(std::vector<int64_t> labels);

    std::span<const int64_t> labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    int64_t at(int i) const { return labels_[static_cast<size_t>(i)]; }

    // K^2 of a surface realizing the cycle: sum of labels + 2 * length.
    int64_t k2() const;

    bool operator==(const LabelCycle&) const = default;

private:
    std::vector<int64_t> labels_;
};

// Smooth complete fan in rank 2: cyclically ordered primitive ray vectors,
// counterclockwise, with consecutive determinants +1. Immutable.
class Fan2D {
public:
    explicit Fan2D(std::vector<RayVec> rays);  // throws on invalid input

    int size() const { return static_cast<int>(rays_.size()); }
    const RayVec& ray(int i) const { return rays_[static_cast<size_t>(i)]; }
    std::span<const RayVec> rays() const { return rays_; }

    // Blow up the torus-fixed point of the cone spanned by rays i and i+1:
    // insert ray v_i + v_{i+1}. Labels transform (.., a_i - 1, -1, a_{i+1} - 1, ..).
    Fan2D star_subdivide(int corner) const;

    // Same ray set rotated so the lexicographically minimal ray comes first;
    // used for deterministic serialization.
    Fan2D rotated_to_lex_min() const;

    bool operator==(const Fan2D&) const = default;

private:
    Fan2D() = default;
    std::vector<RayVec> rays_;
};

// Standard fan of a seed surface. Boundary labels come out as
// P2: (1,1,1)  F0: (0,0,0,0)  F1: (0,-1,0,1)  F2: (0,-2,0,2).
Fan2D seed_fan(Seed s);

// True iff the rays are primitive, every consecutive determinant (including
// the wrap-around) is +1, there are at least 3 rays, and they wind exactly
// once counterclockwise.
bool check_smooth_complete(std::span<const RayVec> rays);
bool check_smooth_complete(const Fan2D& fan);

// Label a_i is the unique integer with v_{i-1} + v_{i+1} = -a_i v_i.
// Throws std::logic_error if no such integer exists (impossible for a valid
// fan). The result satisfies sum(labels) = 12 - 3 * #rays.
LabelCycle boundary_labels(const Fan2D& fan);

// -K nef (every label >= -2) and big (K^2 = sum + 2n > 0).
bool is_weak_del_pezzo(const Fan2D& fan);

// The pure label-side transforms, used to cross-check the fan computations.
LabelCycle corner_insertion(const LabelCycle& c, int corner);
LabelCycle contract_minus_one(const LabelCycle& c, int pos);  // pos must carry -1

}  // namespace wdp
