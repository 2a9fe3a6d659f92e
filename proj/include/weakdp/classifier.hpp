#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "weakdp/surface_builder.hpp"
#include "weakdp/toric_fan.hpp"

namespace wdp {

// Lexicographically minimal representative over all rotations and both
// orientations; idempotent. This is the isomorphism key for classified
// surfaces: the dual graph of the loop determines the class.
LabelCycle normalize_cycle(const LabelCycle& c);

struct ClassifiedSurface {
    int figure_id = 0;  // 1..12 per the embedded figure table; 0 if unmatched
    LabelCycle cycle;   // canonical form
    int64_t k2 = 0;
    BlowupScript witness;
};

struct EnumerationStats {
    long fans_visited = 0;
    long noether_violations = 0;
    long rejected_negative_coverage = 0;
};

inline std::vector<Seed> all_seeds() { return {Seed::P2, Seed::F0, Seed::F1, Seed::F2}; }

// Breadth-first search over corner blow-up towers from the given seeds.
// States with a label < -2 are pruned (labels only ever decrease, so they
// can never recover); a state is classified when every label lies in
// {-2,-1,0,1}, the fan is weak del Pezzo, K^2 is in range, and the
// lattice-side negative-curve coverage check passes. Deduplication key is
// the dihedral class of the label cycle. Deterministic output, sorted by
// figure id (unmatched cycles last).
std::vector<ClassifiedSurface> enumerate_classes(int k2_min = 3, int k2_max = 7,
                                                 const std::vector<Seed>& seeds = all_seeds(),
                                                 EnumerationStats* stats = nullptr);

struct FigureEntry {
    int id;
    std::vector<int64_t> cycle;  // as printed: top row left-to-right, then
                                 // bottom row right-to-left
};

// The twelve loop diagrams, in their printed reading order.
const std::array<FigureEntry, 12>& figure_table();

// Match against the figure table up to rotation and reflection.
std::optional<int> identify_figure(const LabelCycle& c);

struct BlowdownEdge {
    int from_figure = 0;
    int to_figure = 0;
    bool operator==(const BlowdownEdge&) const = default;
};

struct BlowdownWeb {
    std::vector<BlowdownEdge> edges;                       // within the 12
    std::vector<std::pair<int, Seed>> hirzebruch_targets;  // contractions hitting K^2 = 8
    std::vector<LabelCycle> escapes;  // K^2 <= 7 targets outside the input set (closure breaches)
};

// Contract one (-1)-label at a time (delete it, increment both neighbors)
// and normalize: the directed graph of one-step blow-downs.
BlowdownWeb blowdown_web(const std::vector<ClassifiedSurface>& classes);

struct CatalogueChains {
    std::vector<BlowdownEdge> unambiguous;  // edges printed without ambiguity
    std::vector<BlowdownEdge> ambiguous;    // edges in the duplicated portion
    std::string note;
};

// The birational-morphism chains recorded alongside the figure catalogue,
// including the duplicated X(2) occurrence, which is flagged rather than
// silently repaired.
const CatalogueChains& catalogue_chains();

}  // namespace wdp
