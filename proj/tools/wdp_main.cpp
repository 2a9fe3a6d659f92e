#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weakdp/report.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return wdp::kExitPass;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return wdp::kExitUsage;
    }
    out << text;
    if (!out) {
        std::cerr << "error: failed writing " << out_path << "\n";
        return wdp::kExitUsage;
    }
    return wdp::kExitPass;
}

int run_classify(int k2_min, int k2_max, const std::string& out_path) {
    const auto report = wdp::classify_report(k2_min, k2_max);
    const std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        const int rc = write_output(text, out_path);
        if (rc != wdp::kExitPass) return rc;
        std::cout << "classified " << report.at("count").get<int>() << " loop types (expected "
                  << report.at("expected_count").get<int>() << ")\n";
    } else {
        std::cout << text;
    }
    return report.at("count") == report.at("expected_count") ? wdp::kExitPass : wdp::kExitFail;
}

int run_verify(const std::string& script_path, std::vector<int64_t> ds,
               const std::string& out_path) {
    if (ds.empty()) ds = {2};
    const wdp::BlowupScript script = wdp::load_script_file(script_path);
    const auto report = wdp::verification_report(script, ds);
    const int rc = write_output(report.dump(2) + "\n", out_path);
    if (rc != wdp::kExitPass) return rc;
    return report.at("pass").get<bool>() ? wdp::kExitPass : wdp::kExitFail;
}

int run_graph(const std::string& script_path, const std::string& format,
              const std::string& out_path) {
    const wdp::BlowupScript script = wdp::load_script_file(script_path);
    const wdp::SurfaceModel model = wdp::build_from_script(script);
    std::string text;
    if (format == "dot")
        text = wdp::loop_graph_dot(model);
    else if (format == "ascii")
        text = wdp::loop_graph_ascii(model);
    else {
        std::cerr << "error: unknown format " << format << " (expected dot or ascii)\n";
        return wdp::kExitUsage;
    }
    return write_output(text, out_path);
}

int run_web(const std::string& out_path) {
    const auto report = wdp::web_report();
    return write_output(report.dump(2) + "\n", out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak del Pezzo surfaces with toric self-maps: classification and verification"};
    app.require_subcommand(1);

    int k2_min = 3;
    int k2_max = 7;
    std::string out_path;
    std::string script_path;
    std::string format = "dot";
    std::vector<int64_t> ds;

    auto* classify = app.add_subcommand("classify", "enumerate the loop types in a K^2 range");
    classify->add_option("--k2-min", k2_min, "lower K^2 bound")->check(CLI::Range(1, 7));
    classify->add_option("--k2-max", k2_max, "upper K^2 bound")->check(CLI::Range(1, 7));
    classify->add_option("--out", out_path, "write the JSON report here");

    auto* verify = app.add_subcommand("verify", "verify a surface script");
    verify->add_option("script", script_path, "script file (JSON)")->required();
    verify->add_option("--d", ds, "self-map multiplier (repeatable)")->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* graph = app.add_subcommand("graph", "emit the dual graph of a script's loop");
    graph->add_option("script", script_path, "script file (JSON)")->required();
    graph->add_option("--format", format, "dot or ascii");
    graph->add_option("--out", out_path, "write the graph here");

    auto* web = app.add_subcommand("web", "emit the blow-down web and catalogue comparison");
    web->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : wdp::kExitUsage;
    }

    try {
        if (classify->parsed()) {
            if (k2_min > k2_max) {
                std::cerr << "error: --k2-min must not exceed --k2-max\n";
                return wdp::kExitUsage;
            }
            return run_classify(k2_min, k2_max, out_path);
        }
        if (verify->parsed()) return run_verify(script_path, ds, out_path);
        if (graph->parsed()) return run_graph(script_path, format, out_path);
        if (web->parsed()) return run_web(out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wdp::kExitUsage;
    }
    return wdp::kExitUsage;
}
