// Command-line front end: build operators and states from config files,
// compute symbols and Wigner grids, run products and evolutions, verify the
// identity suites, and export CSV / JSON / PGM.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error,
// 3 numerical-tolerance failure. Diagnostics go to stderr only.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "torusweyl/io.hpp"
#include "torusweyl/verify.hpp"

namespace tw = torusweyl;
namespace fs = std::filesystem;
using tw::io::json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kTolerance = 3 };

struct JobConfig {
    std::string command;
    int n = 0;  // 0 = take the space from the input file
    double chi_p = 0.0, chi_q = 0.0;
    std::vector<std::string> inputs;
    std::string output;
    std::string format;  // csv | json | pgm
    std::string mode;
    std::string suite;
    double t = 0.0;
    int steps = 1;
    unsigned seed = 0;
    std::size_t budget = 100000000;

    tw::TorusSpace space() const { return {n, chi_p, chi_q}; }
};

void write_symbol_output(const JobConfig& cfg, const std::string& kind,
                         const tw::TorusSpace& sp, const tw::Matrix& values) {
    if (cfg.format == "json")
        tw::io::save_text(cfg.output, tw::io::symbol_to_json(kind, sp, values).dump(2) + "\n");
    else if (cfg.format == "csv")
        tw::io::save_text(cfg.output, tw::io::symbol_to_csv(kind, sp, values));
    else
        throw std::invalid_argument("format '" + cfg.format + "' not valid for symbol output");
}

tw::io::SymbolRecord load_symbol(const std::string& path) {
    if (fs::path(path).extension() == ".json")
        return tw::io::symbol_from_json(tw::io::load_json(path));
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return tw::io::symbol_from_csv(in);
}

int cmd_wigner(const JobConfig& cfg) {
    const tw::TorusState state = tw::io::state_from_json(tw::io::load_json(cfg.inputs.at(0)));
    if (cfg.n != 0 && cfg.n != state.space().n)
        throw std::invalid_argument("state dimension does not match --n");
    const tw::TorusSpace sp = state.space();
    const tw::CenterSymbol w = tw::wigner(state);

    const int g = 2 * sp.n;  // extended grid covers the full torus
    tw::Matrix grid(g, g);
    Eigen::MatrixXd real_grid(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            grid(i, j) = w.at(i, j);
            real_grid(i, j) = grid(i, j).real();
        }

    tw::cplx norm = 0.0;
    for (int a2 = 0; a2 < sp.n; ++a2)
        for (int b2 = 0; b2 < sp.n; ++b2)
            norm += w.fundamental(a2, b2) *
                    static_cast<double>(tw::reflection_trace(sp, {a2, b2}));

    if (cfg.format == "pgm")
        tw::io::write_pgm(cfg.output, real_grid);
    else
        write_symbol_output(cfg, "center", sp, grid);

    const json sidecar{{"n", sp.n},          {"rows", g},
                       {"cols", g},          {"min", real_grid.minCoeff()},
                       {"max", real_grid.maxCoeff()}, {"normalization", norm.real()}};
    tw::io::save_text(cfg.output + ".json", sidecar.dump(2) + "\n");
    return kOk;
}

int cmd_verify(const JobConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("verify: --n is required");
    const tw::TorusSpace sp = cfg.space();

    tw::SuiteReport rep;
    if (cfg.suite == "cocycle") {
        rep = tw::verify_cocycle(sp);
    } else if (cfg.suite == "traces") {
        rep = tw::verify_traces(sp);
    } else if (cfg.suite == "symbols") {
        rep = tw::verify_symbols(sp, cfg.seed);
    } else if (cfg.suite == "products") {
        rep = tw::verify_products(sp, cfg.seed);
    } else if (cfg.suite == "feline") {
        if (sp.n % 2 == 0) {
            std::cerr << "verify feline: requires odd N\n";
            return kUsage;
        }
        tw::CatMapSpec spec = tw::CatMapSpec::from_cayley({{{1, 0}, {0, 1}}});
        if (!cfg.inputs.empty())
            spec = tw::io::catmap_from_json(tw::io::load_json(cfg.inputs.front()));
        rep = tw::verify_feline(sp, spec, cfg.seed);
    } else {
        std::cerr << "unknown suite '" << cfg.suite << "'\n";
        return kUsage;
    }

    for (const auto& c : rep.checks)
        std::printf("%-40s %10.3e  %s\n", c.name.c_str(), c.max_error,
                    c.pass ? "pass" : "FAIL");
    return rep.all_pass() ? kOk : kTolerance;
}

int cmd_evolve(const JobConfig& cfg) {
    json in = tw::io::load_json(cfg.inputs.at(0));
    double t = cfg.t;
    int steps = cfg.steps;
    std::string mode = cfg.mode;
    if (in.contains("hamiltonian")) {  // evolution job file
        const fs::path base = fs::path(cfg.inputs.at(0)).parent_path();
        if (in.contains("t")) t = in.at("t").get<double>();
        if (in.contains("m_steps")) steps = in.at("m_steps").get<int>();
        if (in.contains("mode")) mode = in.at("mode").get<std::string>();
        in = tw::io::load_json(base / in.at("hamiltonian").get<std::string>());
    }
    const tw::PeriodicPlaneSymbol h = tw::io::hamiltonian_from_json(in);
    if (cfg.n < 1) throw std::invalid_argument("evolve: --n is required");
    const tw::TorusSpace sp = cfg.space();
    const tw::TorusOperator hop = tw::quantize_hamiltonian(sp, h);

    if (mode == "exact" || mode == "trotter") {
        const tw::TorusOperator u = (mode == "exact")
                                        ? tw::propagator_exact(hop, t)
                                        : tw::propagator_trotter(hop, t, steps);
        if (cfg.format != "json")
            throw std::invalid_argument("evolve: operator output requires --format json");
        tw::io::save_text(cfg.output, tw::io::operator_to_json(u).dump(2) + "\n");
        return kOk;
    }
    if (mode == "path") {
        const tw::CenterSymbol us =
            tw::path_integral_center(tw::center_symbol(hop), t, steps, cfg.budget);
        write_symbol_output(cfg, "center", sp, us.values());
        return kOk;
    }
    std::cerr << "unknown mode '" << mode << "'\n";
    return kUsage;
}

int cmd_product(const JobConfig& cfg) {
    if (cfg.inputs.size() < 2)
        throw std::invalid_argument("product: need at least two --in symbol files");
    std::vector<tw::io::SymbolRecord> recs;
    for (const auto& p : cfg.inputs) recs.push_back(load_symbol(p));

    const std::string& kind = cfg.mode;
    if (kind == "chord") {
        std::vector<tw::ChordSymbol> syms;
        for (const auto& r : recs) syms.push_back(tw::io::as_chord_symbol(r));
        const tw::ChordSymbol out = tw::chord_product_multi(syms);
        write_symbol_output(cfg, "chord", out.space(), out.values());
    } else if (kind == "center") {
        std::vector<tw::CenterSymbol> syms;
        for (const auto& r : recs) syms.push_back(tw::io::as_center_symbol(r));
        const tw::CenterSymbol out = tw::center_product_multi(syms, cfg.budget);
        write_symbol_output(cfg, "center", out.space(), out.values());
    } else if (kind == "center_qps") {
        std::vector<tw::QpsCenterSymbol> syms;
        for (const auto& r : recs) syms.push_back(tw::io::as_qps_symbol(r));
        const tw::QpsCenterSymbol out = tw::center_product_multi_qps(syms, cfg.budget);
        write_symbol_output(cfg, "center_qps", out.space(), out.values());
    } else {
        std::cerr << "product: --mode must be chord, center or center_qps\n";
        return kUsage;
    }
    return kOk;
}

int cmd_symbol(const JobConfig& cfg) {
    const tw::TorusOperator op =
        tw::io::operator_from_json(tw::io::load_json(cfg.inputs.at(0)));
    if (cfg.n != 0 && cfg.n != op.space().n)
        throw std::invalid_argument("operator dimension does not match --n");
    if (cfg.mode == "chord") {
        const tw::ChordSymbol s = tw::chord_symbol(op);
        write_symbol_output(cfg, "chord", op.space(), s.values());
    } else if (cfg.mode == "center") {
        const tw::CenterSymbol s = tw::center_symbol(op);
        write_symbol_output(cfg, "center", op.space(), s.values());
    } else if (cfg.mode == "center_qps") {
        const tw::QpsCenterSymbol s = tw::recenter_odd_n(tw::center_symbol(op));
        write_symbol_output(cfg, "center_qps", op.space(), s.values());
    } else {
        std::cerr << "symbol: --mode must be chord, center or center_qps\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    JobConfig cfg;
    CLI::App app{"Weyl and chord representations on the torus"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub, bool needs_out) {
        sub->add_option("--n", cfg.n, "states per degree of freedom");
        sub->add_option("--chi-p", cfg.chi_p, "Floquet angle chi_p in [0,1)");
        sub->add_option("--chi-q", cfg.chi_q, "Floquet angle chi_q in [0,1)");
        sub->add_option("--in", cfg.inputs, "input file(s)");
        auto* out = sub->add_option("--out", cfg.output, "output file");
        if (needs_out) out->required();
        sub->add_option("--format", cfg.format, "csv | json | pgm")
            ->check(CLI::IsMember({"csv", "json", "pgm"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--budget", cfg.budget, "path-sum / product term cap");
    };

    CLI::App* wigner = app.add_subcommand("wigner", "Wigner grid of a state vector");
    add_common(wigner, true);

    CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
    add_common(verify, false);
    verify->add_option("--suite", cfg.suite,
                       "cocycle | traces | symbols | products | feline")
        ->required();

    CLI::App* evolve = app.add_subcommand("evolve", "propagate a torus Hamiltonian");
    add_common(evolve, true);
    evolve->add_option("--t", cfg.t, "evolution time");
    evolve->add_option("--steps", cfg.steps, "slice count for trotter/path modes");
    evolve->add_option("--mode", cfg.mode, "exact | trotter | path");

    CLI::App* product = app.add_subcommand("product", "multiply symbol files");
    add_common(product, true);
    product->add_option("--mode", cfg.mode, "chord | center | center_qps");

    CLI::App* symbol = app.add_subcommand("symbol", "symbol of an operator file");
    add_common(symbol, true);
    symbol->add_option("--mode", cfg.mode, "chord | center | center_qps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (cfg.format.empty()) cfg.format = app.got_subcommand(evolve) ? "json" : "csv";

    try {
        if (app.got_subcommand(wigner)) {
            if (cfg.inputs.empty()) throw std::invalid_argument("wigner: --in is required");
            return cmd_wigner(cfg);
        }
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(evolve)) {
            if (cfg.inputs.empty()) throw std::invalid_argument("evolve: --in is required");
            if (cfg.mode.empty()) cfg.mode = "exact";
            return cmd_evolve(cfg);
        }
        if (app.got_subcommand(product)) return cmd_product(cfg);
        if (app.got_subcommand(symbol)) {
            if (cfg.inputs.empty()) throw std::invalid_argument("symbol: --in is required");
            return cmd_symbol(cfg);
        }
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
