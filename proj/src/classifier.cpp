#include "weakdp/classifier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "weakdp/neg_curves.hpp"

namespace wdp {

namespace {

std::vector<int64_t> rotate(const std::vector<int64_t>& v, size_t start) {
    std::vector<int64_t> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i) out.push_back(v[(start + i) % v.size()]);
    return out;
}

std::vector<int64_t> canonical_key(const LabelCycle& c) {
    std::vector<int64_t> fwd(c.labels().begin(), c.labels().end());
    std::vector<int64_t> rev(fwd.rbegin(), fwd.rend());
    std::vector<int64_t> best = fwd;
    for (size_t s = 0; s < fwd.size(); ++s) {
        for (const auto* base : {&fwd, &rev}) {
            auto cand = rotate(*base, s);
            if (cand < best) best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

LabelCycle normalize_cycle(const LabelCycle& c) { return LabelCycle(canonical_key(c)); }

const std::array<FigureEntry, 12>& figure_table() {
    static const std::array<FigureEntry, 12> table = {{
        {1, {-1, -1, -1, -1, -1, -1}},
        {2, {-2, -1, -2, -1, -1, -1, -1}},
        {3, {-2, -1, -2, -1, -2, -1, -2, -1}},
        {4, {-1, -2, -2, -1, -2, -1, -1, -2}},
        {5, {-1, -2, -2, -1, -2, -2, -1, -2, -2}},
        {6, {-1, 0, -1, -1, -2, -1}},
        {7, {-1, 0, -2, -1, -2, -2, -1}},
        {8, {-2, 0, -2, -1, -2, -2, -2, -1}},
        {9, {0, 0, -1, -1, -1}},
        {10, {-2, 0, 0, -1, -2, -1}},
        {11, {0, 1, -1, -1, -2}},
        {12, {-2, 0, 1, -2, -1, -2}},
    }};
    return table;
}

std::optional<int> identify_figure(const LabelCycle& c) {
    static const auto canon = [] {
        std::map<std::vector<int64_t>, int> m;
        for (const auto& e : figure_table()) m[canonical_key(LabelCycle(e.cycle))] = e.id;
        return m;
    }();
    const auto it = canon.find(canonical_key(c));
    if (it == canon.end()) return std::nullopt;
    return it->second;
}

std::vector<ClassifiedSurface> enumerate_classes(int k2_min, int k2_max,
                                                 const std::vector<Seed>& seeds,
                                                 EnumerationStats* stats) {
    if (k2_min < 1 || k2_min > k2_max || k2_max > 7)
        throw std::invalid_argument("K^2 range must satisfy 1 <= min <= max <= 7");

    EnumerationStats local;
    EnumerationStats& st = stats ? *stats : local;

    struct State {
        Fan2D fan;
        BlowupScript script;
    };
    std::deque<State> queue;
    std::set<std::vector<int64_t>> visited;
    std::vector<ClassifiedSurface> found;

    for (Seed s : seeds) {
        State state{seed_fan(s), BlowupScript{s, {}, {}}};
        const auto key = canonical_key(boundary_labels(state.fan));
        if (visited.insert(key).second) queue.push_back(std::move(state));
    }

    while (!queue.empty()) {
        State state = std::move(queue.front());
        queue.pop_front();
        const LabelCycle labels = boundary_labels(state.fan);
        ++st.fans_visited;
        if (labels.k2() != 12 - state.fan.size()) ++st.noether_violations;

        const auto [lo, hi] =
            std::minmax_element(labels.labels().begin(), labels.labels().end());
        const int64_t k2 = labels.k2();

        if (*lo >= -2 && *hi <= 1 && k2 >= k2_min && k2 <= k2_max &&
            is_weak_del_pezzo(state.fan)) {
            const SurfaceModel model = build_from_script(state.script);
            if (!cross_validate(model).ok())
                throw std::logic_error("enumerated model failed cross-validation");
            if (verify_loop_contains_all_negatives(model).ok) {
                const LabelCycle canon = normalize_cycle(labels);
                ClassifiedSurface cls{identify_figure(canon).value_or(0), canon, k2,
                                      state.script};
                found.push_back(std::move(cls));
            } else {
                ++st.rejected_negative_coverage;
            }
        }

        if (k2 > k2_min) {
            for (int corner = 0; corner < state.fan.size(); ++corner) {
                Fan2D child = state.fan.star_subdivide(corner);
                const LabelCycle child_labels = boundary_labels(child);
                const int64_t child_min =
                    *std::min_element(child_labels.labels().begin(), child_labels.labels().end());
                if (child_min < -2) continue;  // labels never increase: dead branch
                auto key = canonical_key(child_labels);
                if (!visited.insert(std::move(key)).second) continue;
                BlowupScript script = state.script;
                script.steps.push_back(corner);
                queue.push_back(State{std::move(child), std::move(script)});
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const ClassifiedSurface& a, const ClassifiedSurface& b) {
        if (a.figure_id != b.figure_id) {
            if (a.figure_id == 0) return false;
            if (b.figure_id == 0) return true;
            return a.figure_id < b.figure_id;
        }
        return std::vector<int64_t>(a.cycle.labels().begin(), a.cycle.labels().end()) <
               std::vector<int64_t>(b.cycle.labels().begin(), b.cycle.labels().end());
    });
    return found;
}

BlowdownWeb blowdown_web(const std::vector<ClassifiedSurface>& classes) {
    std::map<std::vector<int64_t>, int> lookup;
    for (const auto& c : classes)
        lookup[canonical_key(c.cycle)] = c.figure_id;

    const std::map<std::vector<int64_t>, Seed> hirzebruch = {
        {canonical_key(LabelCycle({0, 0, 0, 0})), Seed::F0},
        {canonical_key(LabelCycle({0, -1, 0, 1})), Seed::F1},
        {canonical_key(LabelCycle({0, -2, 0, 2})), Seed::F2},
    };

    BlowdownWeb web;
    std::set<std::pair<int, int>> seen_edges;
    std::set<std::pair<int, int>> seen_hirz;
    for (const auto& c : classes) {
        for (int pos = 0; pos < c.cycle.size(); ++pos) {
            if (c.cycle.at(pos) != -1) continue;
            const LabelCycle target = contract_minus_one(c.cycle, pos);
            const auto key = canonical_key(target);
            if (target.k2() <= 7) {
                const auto it = lookup.find(key);
                if (it == lookup.end()) {
                    web.escapes.push_back(LabelCycle(key));
                } else if (seen_edges.emplace(c.figure_id, it->second).second) {
                    web.edges.push_back({c.figure_id, it->second});
                }
            } else {
                const auto it = hirzebruch.find(key);
                if (it != hirzebruch.end() &&
                    seen_hirz.emplace(c.figure_id, static_cast<int>(it->second)).second)
                    web.hirzebruch_targets.emplace_back(c.figure_id, it->second);
            }
        }
    }
    std::sort(web.edges.begin(), web.edges.end(), [](const auto& a, const auto& b) {
        return std::pair(a.from_figure, a.to_figure) < std::pair(b.from_figure, b.to_figure);
    });
    std::sort(web.hirzebruch_targets.begin(), web.hirzebruch_targets.end());
    return web;
}

const CatalogueChains& catalogue_chains() {
    static const CatalogueChains chains = {
        {{5, 4}, {2, 1}, {7, 6}, {8, 7}, {10, 9}, {10, 11}, {12, 11}},
        {{4, 2}, {3, 2}},
        "The printed first chain reads X(5)->X(4)->X(2)->X(1)<-X(2)<-X(3) and lists X(2) "
        "twice; the duplicated segment is reported against the computed web instead of "
        "being repaired.",
    };
    return chains;
}

}  // namespace wdp
