// permucell: build the cell, Koszul, bar/cobar, Hochschild and
// Gerstenhaber-Schack complexes, run validations, emit Betti/dimension
// tables, and run the acceptance battery.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "permucell/barcobar.hpp"
#include "permucell/brackets.hpp"
#include "permucell/cells.hpp"
#include "permucell/gs.hpp"
#include "permucell/hochschild.hpp"
#include "permucell/suite.hpp"
#include "json.hpp"

namespace {

using namespace permucell;

struct OutputSpec {
    std::string path;    // empty = stdout
    std::string format;  // json | csv | markdown
};

void emit(const OutputSpec& out, const BettiTable& t) {
    std::string text = out.format == "json"       ? betti_to_json(t)
                       : out.format == "csv"      ? betti_to_csv(t)
                                                  : betti_to_markdown(t);
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::filesystem::path p(out.path);
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream f(p, std::ios::binary);
        f << text;
    }
}

// Build or load cached boundary matrices for a cell complex.
FinChainComplex cells_with_cache(const std::string& family, int n, const std::string& cache_dir) {
    auto build = family == "perm" ? &build_perm_complex : &build_simplex_complex;
    if (cache_dir.empty()) return build(n);
    namespace fs = std::filesystem;
    fs::create_directories(cache_dir);
    FinChainComplex cx = build(n);
    for (auto& [d, m] : cx.diff) {
        fs::path file = fs::path(cache_dir) /
                        (family + "_" + std::to_string(n) + "_deg" + std::to_string(d) + ".mtx");
        if (fs::exists(file)) {
            std::ifstream in(file, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            SparseMatrix cached = SparseMatrix::from_cache_string(ss.str());
            if (!(cached == m)) throw std::runtime_error("cache mismatch at " + file.string());
            m = cached;
        } else {
            std::ofstream outf(file, std::ios::binary);
            outf << m.to_cache_string();
        }
    }
    return cx;
}

int fail_validation(const ValidationReport& rep) {
    for (const auto& issue : rep.issues)
        std::cerr << "validation: degree " << issue.degree << " label " << issue.label << ": "
                  << issue.detail << "\n";
    return 1;
}

int run_betti_job(const FinChainComplex& cx, const OutputSpec& out) {
    ValidationReport rep = validate(cx);
    if (!rep.ok) return fail_validation(rep);
    emit(out, betti(cx));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permucell: exact chain-complex toolkit for permutahedra, Hochschild and"
                 " Gerstenhaber-Schack cohomology"};
    app.set_config("--config", "", "TOML config file supplying defaults; flags override");
    app.require_subcommand(1);

    const char* env_cache = std::getenv("PERMUCELL_CACHE");
    std::string cache_dir = env_cache ? env_cache : "";

    OutputSpec out;
    app.add_option("--out", out.path, "output file (default: stdout)")->capture_default_str();
    app.add_option("--format", out.format, "json | csv | markdown")
        ->default_val("markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));

    // cells
    auto* cells = app.add_subcommand("cells", "cell complex of a simplex or permutahedron");
    std::string family = "perm";
    int cells_n = 3;
    cells->add_option("--family", family, "perm | simplex")
        ->check(CLI::IsMember({"perm", "simplex"}));
    cells->add_option("--n", cells_n, "number of labels [n]")->required()->check(CLI::Range(1, 9));
    cells->add_option("--cache", cache_dir, "boundary matrix cache directory");

    // koszul
    auto* koszul = app.add_subcommand("koszul", "Koszul complex for (dim, m)");
    int k_dim = 1, k_m = 1;
    koszul->add_option("--dim", k_dim)->required()->check(CLI::Range(1, 6));
    koszul->add_option("--m", k_m)->required()->check(CLI::Range(1, 8));

    // bar / cobar
    auto* bar = app.add_subcommand("bar", "bar construction weight piece");
    auto* cobar = app.add_subcommand("cobar", "cobar construction weight piece");
    int b_dim = 1, b_weight = 1;
    for (auto* cmd : {bar, cobar}) {
        cmd->add_option("--dim", b_dim)->required()->check(CLI::Range(1, 6));
        cmd->add_option("--weight", b_weight)->required()->check(CLI::Range(1, 8));
    }

    // hoch
    auto* hoch = app.add_subcommand("hoch", "polydifferential or truncated full Hochschild complex");
    int h_dim = 1, h_m = 1, h_n = 0, h_weight = 0, h_maxdeg = 4;
    std::string h_mode = "poly";
    hoch->add_option("--dim", h_dim)->required()->check(CLI::Range(1, 4));
    hoch->add_option("--mode", h_mode, "poly | full")->check(CLI::IsMember({"poly", "full"}));
    hoch->add_option("--m", h_m, "output weight (poly mode)");
    hoch->add_option("--n", h_n, "coefficient weight (poly mode)");
    hoch->add_option("--weight", h_weight, "internal weight (full mode)");
    hoch->add_option("--max-deg", h_maxdeg, "input degree truncation (full mode)");

    // gs
    auto* gs = app.add_subcommand("gs", "polydifferential or truncated full Gerstenhaber-Schack"
                                        " complex");
    int g_dim = 1, g_m = 1, g_n = 1, g_weight = 0, g_maxdeg = 3;
    std::string g_mode = "poly";
    gs->add_option("--dim", g_dim)->required()->check(CLI::Range(1, 4));
    gs->add_option("--mode", g_mode, "poly | full")->check(CLI::IsMember({"poly", "full"}));
    gs->add_option("--m", g_m, "output-bunch weight (poly mode)");
    gs->add_option("--n", g_n, "input-bunch weight (poly mode)");
    gs->add_option("--weight", g_weight, "internal weight (full mode)");
    gs->add_option("--max-deg", g_maxdeg, "input/output degree truncation (full mode)");

    // bracket
    auto* bracket = app.add_subcommand("bracket", "Gerstenhaber or Schouten bracket, or a"
                                                  " Maurer-Cartan check");
    std::string op = "gerst", in1, in2;
    bracket->add_option("--op", op, "gerst | schouten | mc")
        ->check(CLI::IsMember({"gerst", "schouten", "mc"}));
    bracket->add_option("--in", in1, "first operand (JSON)")->required();
    bracket->add_option("--in2", in2, "second operand (JSON)");

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run the full acceptance battery");
    std::string level = "desk", artifacts;
    int jobs = 1;
    suite_cmd->add_option("--level", level)->check(CLI::IsMember({"desk"}));
    suite_cmd->add_option("--jobs", jobs, "concurrent criteria")->check(CLI::Range(1, 64));
    suite_cmd->add_option("--artifacts", artifacts, "directory for suite artifact files");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cells) {
            FinChainComplex cx = cells_with_cache(family, cells_n, cache_dir);
            ValidationReport rep = validate(cx);
            if (!rep.ok) return fail_validation(rep);
            if (!out.path.empty() || out.format == "markdown") {
                std::cout << "f-vector (cells per dimension):\n";
                for (const auto& [d, c] : f_vector(cx)) std::cout << "  dim " << d << ": " << c << "\n";
            }
            emit(out, betti(cx));
            return 0;
        }
        if (*koszul) return run_betti_job(build_koszul_complex(k_dim, k_m), out);
        if (*bar) return run_betti_job(build_bar_complex(b_dim, b_weight), out);
        if (*cobar) return run_betti_job(build_cobar_complex(b_dim, b_weight), out);
        if (*hoch)
            return run_betti_job(h_mode == "poly"
                                     ? build_polydiff_complex(h_dim, h_m, h_n)
                                     : build_full_hochschild_complex(h_dim, h_weight, h_maxdeg),
                                 out);
        if (*gs)
            return run_betti_job(g_mode == "poly"
                                     ? build_polydiff_gs_complex(g_dim, g_m, g_n)
                                     : build_full_gs_complex(g_dim, g_weight, g_maxdeg, g_maxdeg),
                                 out);
        if (*bracket) {
            auto read = [](const std::string& path) {
                std::ifstream f(path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open " + path);
                std::stringstream ss;
                ss << f.rdbuf();
                return ss.str();
            };
            if (op == "gerst") {
                if (in2.empty()) throw CLI::ValidationError("--in2 required for gerst");
                Cochain a = cochain_from_json(read(in1));
                Cochain b = cochain_from_json(read(in2));
                std::cout << cochain_to_json(gerstenhaber_bracket(a, b));
            } else if (op == "schouten") {
                if (in2.empty()) throw CLI::ValidationError("--in2 required for schouten");
                auto read_pv = [&](const std::string& path) {
                    nlohmann::json j = nlohmann::json::parse(read(path));
                    PolyVector p{j.at("dim").get<int>(), {}};
                    for (const auto& t : j.at("terms"))
                        p.terms[{t.at("ext").get<std::vector<int>>(),
                                 Monomial(p.dim, t.at("sym").get<std::vector<int>>())}] =
                            Rational::parse(t.at("coeff").get<std::string>());
                    return p;
                };
                PolyVector r = schouten_bracket(read_pv(in1), read_pv(in2));
                std::cout << polyvector_str(r) << "\n";
            } else {
                Cochain g = cochain_from_json(read(in1));
                McReport rep = mc_check(g);
                std::cout << "maurer-cartan residual "
                          << (rep.is_mc ? "vanishes" : "has " +
                                            std::to_string(rep.residual.terms.size()) + " terms")
                          << " within the window\n";
                if (!rep.is_mc) std::cout << cochain_to_json(rep.residual);
            }
            return 0;
        }
        if (*suite_cmd) {
            permucell::suite::SuiteOptions opt;
            opt.jobs = jobs;
            opt.artifact_dir = artifacts;
            auto results = permucell::suite::run_acceptance(opt);
            std::cout << permucell::suite::format_report(results);
            return permucell::suite::all_passed(results) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
