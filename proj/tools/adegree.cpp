// Command-line front end for the arithmetic-degree toolkit.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error,
// 3 coefficient budget exceeded.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "adegree/budget.hpp"
#include "adegree/parse.hpp"
#include "adegree/report.hpp"

using namespace adegree;

namespace {

struct CliOptions {
    ExperimentConfig config;
    std::vector<std::string> point_args;
    std::vector<std::string> param_args;
    std::string format = "text";
    std::string prime;
    std::int64_t budget_bits = 0;
};

void add_common(CLI::App* cmd, CliOptions& opt, bool with_map, bool with_points = true) {
    if (with_map) {
        cmd->add_option("map", opt.config.map_source,
                        "map DSL, e.g. \"A2: (y^2, x)\" or \"P2: [Y^2, X*Z, Z^2]\"");
        cmd->add_option("--catalog", opt.config.catalog_id,
                        "catalog entry (classification case id or example name)");
    }
    if (with_points)
        cmd->add_option("--point", opt.point_args,
                        "point, affine \"2,3\" or projective \"2,3,1\"; repeatable");
    cmd->add_option("--n", opt.config.max_n,
                    "iteration budget (default 12 for quadratic maps, 8 for cubic)");
    cmd->add_option("--window", opt.config.window,
                    "trailing window for estimates (default: half of the profile)");
    cmd->add_option("--tol", opt.config.tolerance,
                    "tolerance override (defaults: 0.05 for estimated delta, 1e-9 exact, "
                    "1e-2 catalog)");
    cmd->add_option("--param", opt.param_args, "catalog parameter k=v; repeatable");
    cmd->add_option("--seed", opt.config.seed, "random seed (reserved; default 0)");
    cmd->add_option("--format", opt.format, "output format: text | json | csv (default text)");
    cmd->add_option("--budget-bits", opt.budget_bits,
                    "coefficient bit budget (default 2^20; also env ADEGREE_BUDGET_BITS)");
    cmd->add_flag("--parallel", opt.config.parallel, "fan out independent jobs");
}

void finalize(CliOptions& opt) {
    for (const auto& p : opt.point_args) opt.config.points.push_back(parse_point(p));
    for (const auto& kv : opt.param_args) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected k=v");
        opt.config.params[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    if (opt.format == "json") opt.config.format = OutputFormat::Json;
    else if (opt.format == "csv") opt.config.format = OutputFormat::Csv;
    else if (opt.format == "text") opt.config.format = OutputFormat::Text;
    else throw CLI::ValidationError("--format", "expected text, json, or csv");
    if (!opt.prime.empty()) opt.config.prime = Int(opt.prime);

    if (opt.budget_bits > 0) {
        set_coefficient_bit_budget(opt.budget_bits);
    } else if (const char* env = std::getenv("ADEGREE_BUDGET_BITS")) {
        set_coefficient_bit_budget(std::atoll(env));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adegree — dynamical and arithmetic degrees of rational self-maps of P^N"};
    app.require_subcommand(1);

    CliOptions opt;

    auto* degseq = app.add_subcommand("degseq", "degree sequence and dynamical degree estimate");
    add_common(degseq, opt, true, false);

    auto* alpha = app.add_subcommand("alpha", "orbit heights and arithmetic degree");
    add_common(alpha, opt, true);

    auto* hcanon = app.add_subcommand("hcanon", "canonical height estimates along an orbit");
    add_common(hcanon, opt, true);
    hcanon->add_option("--delta", opt.config.delta_override, "dynamical degree for hcirc");

    auto* hcirc = app.add_subcommand("hcirc", "liminf iterate identity check");
    add_common(hcirc, opt, true);
    hcirc->add_option("--m", opt.config.m, "iterate order (default 2)");
    hcirc->get_option("--n")->description("orbit budget per residue (default 8)");
    hcirc->add_option("--delta", opt.config.delta_override, "dynamical degree of f")->required();

    auto* stable = app.add_subcommand("stable", "boundary orbit / algebraic stability verdict");
    add_common(stable, opt, true, false);

    auto* monomial = app.add_subcommand("monomial", "monomial map: char poly, delta, alpha");
    monomial->add_option("matrix", opt.config.matrix, "integer matrix, e.g. [[0,2],[1,0]]")
        ->required();
    add_common(monomial, opt, false);

    auto* certify = app.add_subcommand("certify", "p-adic growth certificate");
    add_common(certify, opt, true);
    certify->add_option("--kind", opt.config.kind,
                        "fixed-point | case3 | case11 | case32")->required();
    certify->add_option("--prime", opt.prime,
                        "prime override (default: smallest admissible prime)");
    certify->add_option("--period", opt.config.period,
                        "certify f^m instead of f (default 1)");

    auto* catalog = app.add_subcommand("catalog", "list or verify the catalog");
    std::string catalog_action, catalog_id;
    catalog->add_option("action", catalog_action, "'list' or 'verify'");
    catalog->add_option("id", catalog_id, "case id, example name, or 'all'");
    add_common(catalog, opt, false, false);

    auto* report = app.add_subcommand("report", "combined machine-readable report");
    add_common(report, opt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        finalize(opt);
        for (auto* cmd : {degseq, alpha, hcanon, hcirc, stable, monomial, certify, catalog, report}) {
            if (cmd->parsed()) {
                opt.config.command = cmd->get_name();
                break;
            }
        }
        if (catalog->parsed()) {
            // Accepted forms: `catalog list`, `catalog verify <id>`, `catalog <id>`.
            if (catalog_action == "verify") {
                if (catalog_id.empty()) throw CLI::ValidationError("catalog", "verify needs an id");
                opt.config.catalog_id = catalog_id;
            } else if (catalog_action == "list" || catalog_action.empty()) {
                opt.config.catalog_id = "list";
            } else {
                opt.config.catalog_id = catalog_action;
            }
        }
        ReportDocument doc = run_command(opt.config);
        std::cout << doc.rendered(opt.config.format);
        return doc.exit_code();
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        if (!opt.config.map_source.empty() && e.position() < opt.config.map_source.size()) {
            std::cerr << "  " << opt.config.map_source << "\n  "
                      << std::string(e.position(), ' ') << "^\n";
        }
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
