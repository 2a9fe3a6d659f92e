#include "weakdp/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "weakdp/endo.hpp"
#include "weakdp/neg_curves.hpp"

namespace wdp {

namespace {

using nlohmann::json;

std::string form_name(SeedForm f) {
    switch (f) {
        case SeedForm::Plane: return "plane";
        case SeedForm::Quadric: return "quadric";
        case SeedForm::F2: return "f2";
    }
    return "?";
}

json cycle_to_json(const LabelCycle& c) {
    return json(std::vector<int64_t>(c.labels().begin(), c.labels().end()));
}

json class_to_json(const DivisorClass& c) {
    return json(std::vector<int64_t>(c.coeffs().begin(), c.coeffs().end()));
}

}  // namespace

BlowupScript script_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("script must be a JSON object");
    if (!j.contains("seed") || !j.at("seed").is_string())
        throw std::invalid_argument("script needs a \"seed\" string");
    BlowupScript script;
    script.seed = parse_seed(j.at("seed").get<std::string>());
    if (j.contains("blowups")) {
        if (!j.at("blowups").is_array())
            throw std::invalid_argument("\"blowups\" must be an array of corner indices");
        for (const auto& v : j.at("blowups")) {
            if (!v.is_number_integer() || v.get<int64_t>() < 0)
                throw std::invalid_argument("corner indices must be non-negative integers");
            script.steps.push_back(v.get<int>());
        }
    }
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw std::invalid_argument("\"name\" must be a string");
        script.name = j.at("name").get<std::string>();
    }
    return script;
}

json script_to_json(const BlowupScript& script) {
    json j;
    j["seed"] = std::string(seed_name(script.seed));
    j["blowups"] = script.steps;
    if (!script.name.empty()) j["name"] = script.name;
    return j;
}

BlowupScript load_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open script file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return script_from_json(j);
}

json surface_to_json(const SurfaceModel& model) {
    json j;
    j["script"] = script_to_json(model.script());
    j["lattice_form"] = form_name(model.signature().form());
    j["exceptional_count"] = model.signature().exceptional_count();
    j["k2"] = model.signature().canonical_square();

    const Fan2D fan = model.fan().rotated_to_lex_min();
    json rays = json::array();
    for (const auto& r : fan.rays()) rays.push_back(json::array({r.x, r.y}));
    j["rays"] = rays;

    const LabelCycle cycle = dual_graph_cycle(model);
    j["cycle"] = cycle_to_json(cycle);
    j["canonical_cycle"] = cycle_to_json(normalize_cycle(cycle));
    const auto fig = identify_figure(cycle);
    j["figure"] = fig ? json(*fig) : json(nullptr);

    json loop = json::array();
    for (const auto& r : model.loop()) {
        loop.push_back(json{{"name", r.name},
                            {"class", class_to_json(r.cls)},
                            {"self_intersection", r.self_int}});
    }
    j["loop"] = loop;
    return j;
}

json verification_report(const BlowupScript& script, const std::vector<int64_t>& ds) {
    const SurfaceModel model = build_from_script(script);
    const int64_t k2 = model.signature().canonical_square();
    const bool classified_range = k2 <= 7;

    json checks = json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, const std::string& status, const std::string& detail) {
        checks.push_back(json{{"name", name}, {"status", status}, {"detail", detail}});
        if (status == "fail") all_pass = false;
    };

    const ValidationReport val = cross_validate(model);
    std::string simplicity_fail;
    std::string consistency_fail;
    std::string anticanonical_fail;
    for (const auto& issue : val.issues) {
        std::string& sink = issue.check == "loop_simplicity"   ? simplicity_fail
                            : issue.check == "anticanonical_sum" ? anticanonical_fail
                                                                  : consistency_fail;
        if (!sink.empty()) sink += "; ";
        sink += issue.check + ": " + issue.detail;
    }
    add("model_consistency", consistency_fail.empty() ? "pass" : "fail", consistency_fail);
    add("loop_simplicity", simplicity_fail.empty() ? "pass" : "fail", simplicity_fail);
    add("anticanonical_sum", anticanonical_fail.empty() ? "pass" : "fail", anticanonical_fail);

    if (model.signature().canonical_square() >= 1) {
        const LoopCoverage cov = verify_loop_contains_all_negatives(model);
        if (cov.ok) {
            add("negatives_in_loop", "pass", "every negative class certified against the loop");
        } else {
            add("negatives_in_loop", "fail", "uncovered class " + to_string(*cov.witness));
        }
    } else {
        add("negatives_in_loop", "vacuous", "K^2 < 1: enumeration not finite");
    }

    {
        std::string offending;
        for (const auto& r : model.loop())
            if (r.self_int < -2 || r.self_int > 1) {
                if (!offending.empty()) offending += ", ";
                offending += r.name + ": " + std::to_string(r.self_int);
            }
        if (!classified_range)
            add("self_intersections_in_range", "vacuous",
                "K^2 = " + std::to_string(k2) + " > 7: outside the classified range");
        else
            add("self_intersections_in_range", offending.empty() ? "pass" : "fail", offending);
    }

    const NegativeComponentReport comp = components_and_d_check(model);
    {
        std::ostringstream os;
        os << "m = " << comp.m << ", e = " << comp.e;
        if (!classified_range)
            add("negative_components", "vacuous", os.str() + " (K^2 > 7)");
        else
            add("negative_components", (comp.m >= 3 && comp.e == 1) ? "pass" : "fail", os.str());
    }
    if (comp.d_is_zero) {
        add("d_sum_identity", "vacuous", "D = 0, identity stated only for D != 0");
    } else {
        std::ostringstream os;
        os << "D.sum(E) = " << comp.pairing << ", 2e = " << 2 * comp.e;
        add("d_sum_identity", comp.identity_holds ? "pass" : "fail", os.str());
    }

    json ledgers = json::array();
    for (int64_t d : ds) {
        const std::string name = "ramification_ledger_d" + std::to_string(d);
        try {
            const Endomorphism endo = mult_endomorphism(model, d);
            const RamificationLedger ledger = ramification_ledger(endo);
            json branches = json::array();
            for (const auto& [curve, coeff] : ledger.branch_terms)
                branches.push_back(json{{"curve", curve}, {"coefficient", coeff}});
            ledgers.push_back(json{{"d", d},
                                   {"degree", endo.degree()},
                                   {"branch_terms", branches},
                                   {"z_class", class_to_json(ledger.z_class)},
                                   {"ramification_class", class_to_json(ledger.ramification_class)}});
            add(name, "pass", "K - f*K = (d-1) sum(E) + Z holds exactly");
        } catch (const std::exception& e) {
            add(name, "fail", e.what());
        }
    }

    json j;
    j["surface"] = surface_to_json(model);
    j["checks"] = checks;
    j["ledgers"] = ledgers;
    j["pass"] = all_pass;
    return j;
}

int expected_class_count(int k2_min, int k2_max) {
    int count = 0;
    for (const auto& entry : figure_table()) {
        const int64_t k2 = LabelCycle(entry.cycle).k2();
        if (k2 >= k2_min && k2 <= k2_max) ++count;
    }
    return count;
}

json classify_report(int k2_min, int k2_max) {
    EnumerationStats stats;
    const auto classes = enumerate_classes(k2_min, k2_max, all_seeds(), &stats);
    json arr = json::array();
    for (const auto& c : classes) {
        BlowupScript witness = c.witness;
        if (c.figure_id > 0) witness.name = "X" + std::to_string(c.figure_id);
        arr.push_back(json{{"figure", c.figure_id > 0 ? json(c.figure_id) : json(nullptr)},
                           {"k2", c.k2},
                           {"cycle", cycle_to_json(c.cycle)},
                           {"witness", script_to_json(witness)}});
    }
    json j;
    j["k2_min"] = k2_min;
    j["k2_max"] = k2_max;
    j["count"] = classes.size();
    j["expected_count"] = expected_class_count(k2_min, k2_max);
    j["classes"] = arr;
    j["stats"] = json{{"fans_visited", stats.fans_visited},
                      {"noether_violations", stats.noether_violations},
                      {"rejected_negative_coverage", stats.rejected_negative_coverage}};
    return j;
}

std::string loop_graph_dot(const SurfaceModel& model) {
    std::ostringstream os;
    os << "graph anticanonical_loop {\n";
    os << "  node [shape=circle];\n";
    const int n = model.loop_size();
    for (const auto& r : model.loop())
        os << "  \"" << r.name << "\" [label=\"" << r.self_int << "\"];\n";
    for (int i = 0; i < n; ++i)
        os << "  \"" << model.loop()[static_cast<size_t>(i)].name << "\" -- \""
           << model.loop()[static_cast<size_t>((i + 1) % n)].name << "\";\n";
    os << "}\n";
    return os.str();
}

std::string loop_graph_ascii(const SurfaceModel& model) {
    const LabelCycle cycle = dual_graph_cycle(model);
    const auto fig = identify_figure(cycle);
    std::vector<int64_t> seq;
    if (fig)
        seq = figure_table()[static_cast<size_t>(*fig - 1)].cycle;
    else
        seq.assign(cycle.labels().begin(), cycle.labels().end());

    const int n = static_cast<int>(seq.size());
    const int top_n = n / 2;
    std::vector<std::string> top, bottom;
    for (int i = 0; i < top_n; ++i)
        top.push_back("(" + std::to_string(seq[static_cast<size_t>(i)]) + ")");
    for (int i = n - 1; i >= top_n; --i)
        bottom.push_back("(" + std::to_string(seq[static_cast<size_t>(i)]) + ")");

    std::string bottom_row;
    for (size_t i = 0; i < bottom.size(); ++i) {
        if (i) bottom_row += " -- ";
        bottom_row += bottom[i];
    }

    std::string top_row;
    if (top.size() <= 1) {
        top_row = top.empty() ? std::string() : top[0];
    } else {
        size_t top_base = 0;
        for (const auto& t : top) top_base += t.size();
        top_base += 4 * (top.size() - 1);
        const size_t extra = bottom_row.size() > top_base ? bottom_row.size() - top_base : 0;
        const size_t per = extra / (top.size() - 1);
        const size_t rem = extra % (top.size() - 1);
        for (size_t i = 0; i < top.size(); ++i) {
            if (i) top_row += " " + std::string(2 + per + (i <= rem ? 1 : 0), '-') + " ";
            top_row += top[i];
        }
    }

    const size_t width = std::max(top_row.size(), bottom_row.size());
    std::string bar(width, ' ');
    if (width >= 3) {
        bar[1] = '|';
        bar[bottom_row.size() - 2] = '|';
        while (!bar.empty() && bar.back() == ' ') bar.pop_back();
    }

    std::ostringstream os;
    os << top_row << "\n" << bar << "\n" << bar << "\n" << bottom_row << "\n";
    if (fig)
        os << "Figure " << *fig << "\n";
    else
        os << "loop (K^2 = " << cycle.k2() << ", unclassified)\n";
    return os.str();
}

json web_report() {
    const auto classes = enumerate_classes();
    const BlowdownWeb web = blowdown_web(classes);
    const CatalogueChains& chains = catalogue_chains();

    auto edges_to_json = [](const std::vector<BlowdownEdge>& edges) {
        json arr = json::array();
        for (const auto& e : edges) arr.push_back(json::array({e.from_figure, e.to_figure}));
        return arr;
    };
    auto has_edge = [&web](const BlowdownEdge& e) {
        return std::find(web.edges.begin(), web.edges.end(), e) != web.edges.end();
    };

    json missing = json::array();
    for (const auto& e : chains.unambiguous)
        if (!has_edge(e)) missing.push_back(json::array({e.from_figure, e.to_figure}));
    json ambiguous_status = json::array();
    for (const auto& e : chains.ambiguous)
        ambiguous_status.push_back(json{{"edge", json::array({e.from_figure, e.to_figure})},
                                        {"computed", has_edge(e)}});

    std::ostringstream dot;
    dot << "digraph blowdown_web {\n";
    for (const auto& c : classes)
        dot << "  \"X(" << c.figure_id << ")\" [label=\"X(" << c.figure_id << ") K2=" << c.k2
            << "\"];\n";
    for (const auto& e : web.edges)
        dot << "  \"X(" << e.from_figure << ")\" -> \"X(" << e.to_figure << ")\";\n";
    for (const auto& [from, seed] : web.hirzebruch_targets)
        dot << "  \"X(" << from << ")\" -> \"" << seed_name(seed) << "\" [style=dashed];\n";
    dot << "}\n";

    json hirz = json::array();
    for (const auto& [from, seed] : web.hirzebruch_targets)
        hirz.push_back(json::array({from, std::string(seed_name(seed))}));
    json escapes = json::array();
    for (const auto& c : web.escapes) escapes.push_back(cycle_to_json(c));

    json j;
    j["edges"] = edges_to_json(web.edges);
    j["hirzebruch_targets"] = hirz;
    j["escapes"] = escapes;
    j["dot"] = dot.str();
    j["catalogue_comparison"] = json{{"unambiguous_printed", edges_to_json(chains.unambiguous)},
                                 {"missing_unambiguous", missing},
                                 {"ambiguous_printed", ambiguous_status},
                                 {"note", chains.note}};
    return j;
}

}  // namespace wdp
