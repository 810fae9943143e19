#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "holodiff/cli/oracle.hpp"
#include "holodiff/cli/report.hpp"
#include "holodiff/cli/sweep.hpp"
#include "holodiff/engine.hpp"
#include "holodiff/errors.hpp"

namespace {

using namespace holodiff;
using cli::Json;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_inconsistent = 3;

int cmd_decompose(const std::string& path, const std::string& format, bool verbose) {
    const RamInput input = cli::load_ram_input(path);
    const EngineResult result = run_engine(input);
    const Json report = cli::decomp_report(input, result, verbose);
    std::cout << (format == "json" ? cli::dump(report) : cli::decomp_text(report));
    return exit_ok;
}

int cmd_psl2(std::int64_t ell, const std::string& format, bool verbose) {
    const Json report = cli::psl2_report(ell, verbose);
    if (format == "json") {
        std::cout << cli::dump(report);
    } else {
        std::cout << cli::psl2_text(report);
        if (verbose) {
            std::cout << "h0 on 3-regular classes\n";
            for (const auto& row : report["h0"]) {
                std::cout << fmt::format("  {:<8} {}\n", row["class"].get<std::string>(), row["value"].dump());
            }
        }
    }
    return exit_ok;
}

int cmd_sweep(std::int64_t from, std::int64_t to, const std::string& format, bool timing, bool with_engine) {
    if (from > to) throw ValidationError(fmt::format("--from {} exceeds --to {}", from, to));
    const auto rows = cli::sweep(from, to, cli::worker_count(), with_engine);
    bool all = true;
    Json doc = Json::array();
    for (const auto& row : rows) {
        all = all && row.passed();
        Json failures = Json::array();
        for (const auto& inv : row.invariants) {
            if (!inv.passed) failures.push_back({{"invariant", inv.name}, {"detail", inv.detail}});
        }
        Json entry{{"ell", row.ell}, {"case", row.case_id}, {"passed", row.passed()}, {"failures", std::move(failures)}};
        if (timing) entry["seconds"] = row.seconds;
        doc.push_back(std::move(entry));
    }
    if (format == "json") {
        std::cout << cli::dump(doc);
    } else {
        std::cout << fmt::format("{:>6} {:>5} {:>6}{}\n", "ell", "case", "status", timing ? fmt::format(" {:>9}", "seconds") : "");
        for (const auto& row : rows) {
            std::cout << fmt::format("{:>6} {:>5} {:>6}{}\n", row.ell, row.case_id, row.passed() ? "pass" : "FAIL",
                                     timing ? fmt::format(" {:>9.3f}", row.seconds) : "");
            for (const auto& inv : row.invariants) {
                if (!inv.passed) std::cout << fmt::format("         {}: {}\n", inv.name, inv.detail);
            }
        }
        std::cout << fmt::format("{} primes, {}\n", rows.size(), all ? "all invariants hold" : "FAILURES");
    }
    return all ? exit_ok : exit_inconsistent;
}

int report_oracle(const std::string& name, const cli::OracleOutcome& outcome) {
    if (outcome.passed()) {
        std::cout << fmt::format("{}: pass ({} checked)\n", name, outcome.checked);
        return exit_ok;
    }
    std::cout << fmt::format("{}: FAIL after {} checks\n  {}\n", name, outcome.checked, *outcome.counterexample);
    return exit_inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompositions of holomorphic differentials under hypo-elementary and PSL(2, l) actions"};
    app.require_subcommand(1);

    std::string format = "text";
    bool verbose = false;

    auto* decompose = app.add_subcommand("decompose", "Decompose H^0(X, Omega_X) from a ramification document");
    std::string path;
    decompose->add_option("path", path, "RamInputDocument (JSON)")->required();
    decompose->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    decompose->add_flag("--verbose", verbose, "Include per-layer divisors and characters");

    auto* psl2_cmd = app.add_subcommand("psl2", "PSL(2, l) acting on X(l) in characteristic 3");
    std::int64_t ell = 0;
    psl2_cmd->add_option("--ell", ell, "Prime l >= 7")->required();
    psl2_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    psl2_cmd->add_flag("--verbose", verbose, "Include all blocks, h0 values and subgroup restrictions");

    auto* sweep_cmd = app.add_subcommand("sweep", "Check every invariant for each prime in a range");
    std::int64_t from = 7;
    std::int64_t to = 97;
    bool no_timing = false;
    bool no_engine = false;
    sweep_cmd->add_option("--from", from, "First value of l")->required();
    sweep_cmd->add_option("--to", to, "Last value of l")->required();
    sweep_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sweep_cmd->add_flag("--no-timing", no_timing, "Omit wall-clock timings for byte-stable output");
    sweep_cmd->add_flag("--no-engine", no_engine, "Skip running the engine on subgroup restrictions");

    auto* oracle = app.add_subcommand("oracle", "Independent cross-checks");
    oracle->require_subcommand(1);
    std::int64_t samples = 500;
    std::uint64_t seed = 1;
    bool grid = false;
    auto* divisor = oracle->add_subcommand("divisor", "Divisor multiplicities against the enumeration oracle");
    divisor->add_option("--samples", samples, "Random instances")->check(CLI::NonNegativeNumber);
    divisor->add_option("--seed", seed, "RNG seed");
    divisor->add_flag("--grid", grid, "Also run the exhaustive p = 3 grid with at most two jumps");
    std::int64_t class_to = 500;
    auto* classnumber = oracle->add_subcommand("classnumber", "Class numbers against reduced binary forms");
    classnumber->add_option("--to", class_to, "Largest l");
    std::int64_t max_order = 2000;
    auto* orthogonality = oracle->add_subcommand("orthogonality", "<Phi_a, phi_b> on random hypo-elementary groups");
    orthogonality->add_option("--samples", samples, "Random groups")->check(CLI::NonNegativeNumber);
    orthogonality->add_option("--seed", seed, "RNG seed");
    orthogonality->add_option("--max-order", max_order, "Largest group order")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*decompose) return cmd_decompose(path, format, verbose);
        if (*psl2_cmd) return cmd_psl2(ell, format, verbose);
        if (*sweep_cmd) return cmd_sweep(from, to, format, !no_timing, !no_engine);
        if (*divisor) {
            int code = report_oracle("divisor", cli::divisor_oracle(samples, seed));
            if (grid && code == exit_ok) code = report_oracle("divisor grid", cli::divisor_grid(50));
            return code;
        }
        if (*classnumber) return report_oracle("classnumber", cli::classnumber_oracle(class_to));
        if (*orthogonality) return report_oracle("orthogonality", cli::orthogonality_oracle(samples, seed, max_order));
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_inconsistent;
    }
    return exit_invalid;
}
