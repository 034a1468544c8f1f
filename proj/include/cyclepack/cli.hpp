#pragma once

// Command-line surface. Kept in a header so the test suite can drive the
// exact binary behavior (exit codes, report bytes) in-process.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "classify.hpp"
#include "format.hpp"
#include "fuzz.hpp"
#include "gen.hpp"
#include "pack.hpp"

namespace cyclepack {

namespace detail {

inline Multigraph load_graph(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty()) {
        std::string text = inline_text;
        std::replace(text.begin(), text.end(), ';', '\n');
        return parse_graph(text);
    }
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_graph(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline std::optional<FamilyClass> family_class_from_name(const std::string& name) {
    for (FamilyClass c : {FamilyClass::A, FamilyClass::B_I, FamilyClass::B_II, FamilyClass::C_I,
                          FamilyClass::C_II, FamilyClass::D_I, FamilyClass::D_II, FamilyClass::E,
                          FamilyClass::F})
        if (family_class_name(c) == name) return c;
    return std::nullopt;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"disjoint-cycle packing decision engine for multigraphs"};
    app.name("cyclepack");
    app.require_subcommand(1);

    std::string input = "-";
    std::string inline_text;
    int k = 2;
    long long budget = pack_default_budget;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "graph file in the text format, or - for stdin");
        cmd->add_option("--inline", inline_text, "graph text inline (';' separates lines)");
        cmd->add_option("--k", k, "number of disjoint cycles to ask for")->required();
    };

    CLI::App* cmd_decide = app.add_subcommand("decide", "verdict via the structural characterization");
    add_graph_opts(cmd_decide);
    CLI::App* cmd_classify = app.add_subcommand("classify", "verdict plus every satisfied obstruction");
    add_graph_opts(cmd_classify);
    CLI::App* cmd_pack = app.add_subcommand("pack", "extract k vertex-disjoint cycles by exact search");
    add_graph_opts(cmd_pack);
    cmd_pack->add_option("--budget", budget, "node-expansion limit for the search");

    // gen
    std::string cls_name;
    FamilySpec spec;
    int gen_n = 0, gen_h = 0, gen_t = 1;
    double strong_density = 0.3;
    CLI::App* cmd_gen = app.add_subcommand("gen", "emit a named family instance in the text format");
    cmd_gen->add_option("class", cls_name,
                        "A B_I B_II C_I C_II D_I D_II E F, or 'random' (seeded D_k), or 'Y' (Y_{h,t})")
        ->required();
    cmd_gen->add_option("--k", spec.k, "target k (A, B_II, C_I, C_II, random)");
    cmd_gen->add_option("--k-prime", spec.k_prime, "residual k' (B_I, D_I, D_II)");
    cmd_gen->add_option("--alpha-prime", spec.alpha_prime, "strong matching size (A, B_I, D_I, D_II, F)");
    cmd_gen->add_option("--n", gen_n, "vertex count (A, C_I, C_II, random)");
    cmd_gen->add_option("--rim", spec.rim, "rim length (E)");
    cmd_gen->add_option("--strong-count", spec.strong_count, "doubled edges (C_I, C_II) / spokes (E)");
    cmd_gen->add_option("--leaves", spec.leaves, "superstar leaf count (D_I)");
    cmd_gen->add_flag("--extra-r-strong", spec.extra_r_strong, "extra doubled pairs inside R (C_II)");
    cmd_gen->add_option("--seed", spec.seed, "labeling seed");
    cmd_gen->add_option("--strong-density", strong_density, "edge doubling probability (random)")
        ->check(CLI::Range(0.0, 1.0));
    cmd_gen->add_option("--yh", gen_h, "independent part size (Y)");
    cmd_gen->add_option("--yt", gen_t, "clique size (Y)");

    // fuzz
    FuzzParams fuzz;
    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "cross-validate the characterization vs the packer");
    cmd_fuzz->add_option("--k", fuzz.k, "packing size under test");
    cmd_fuzz->add_option("--n-min", fuzz.n_min, "minimum vertex count (default 2k)");
    cmd_fuzz->add_option("--n-max", fuzz.n_max, "maximum vertex count")->required();
    cmd_fuzz->add_option("--trials", fuzz.trials, "number of trials")->required();
    cmd_fuzz->add_option("--seed", fuzz.seed, "stream seed");
    cmd_fuzz->add_option("--strong-density", fuzz.strong_density, "edge doubling probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd_fuzz->add_option("--loop-density", fuzz.loop_density, "per-vertex loop probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd_fuzz->add_option("--budget", fuzz.budget, "packer node-expansion limit");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }

    try {
        if (cmd_decide->parsed() || cmd_classify->parsed()) {
            Multigraph g = detail::load_graph(input, inline_text);
            Decision d = decide(g, k);
            out << format_report(d);
            if (cmd_classify->parsed()) return 0;
            switch (d.verdict) {
                case Verdict::Packable: return 0;
                case Verdict::Blocked: return 1;
                default: return 2;
            }
        }
        if (cmd_pack->parsed()) {
            Multigraph g = detail::load_graph(input, inline_text);
            PackResult r = find_disjoint_cycles(g, k, budget);
            if (r.status == PackStatus::Found) {
                for (const auto& cycle : r.packing.cycles) {
                    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
                    out << "\n";
                }
                return 0;
            }
            return r.status == PackStatus::Absent ? 1 : 2;
        }
        if (cmd_gen->parsed()) {
            if (cls_name == "random") {
                out << serialize(random_multigraph_in_Dk(gen_n, spec.k, strong_density, spec.seed));
                return 0;
            }
            if (cls_name == "Y" || cls_name == "y") {
                out << serialize(multigraph_from_simple(y_graph(gen_h, gen_t)));
                return 0;
            }
            auto cls = detail::family_class_from_name(cls_name);
            if (!cls) throw std::invalid_argument("unknown family class: " + cls_name);
            spec.cls = *cls;
            spec.n = gen_n;
            out << serialize(make_family(spec));
            return 0;
        }
        if (cmd_fuzz->parsed()) {
            FuzzOutcome outcome = run_fuzz(fuzz);
            out << outcome.report;
            return outcome.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace cyclepack
