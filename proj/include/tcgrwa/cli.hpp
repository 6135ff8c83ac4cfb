// cli.hpp - command-line front end (spectrum, dynamics, convergence)
//
// Exit codes: 0 success, 2 argument error, 3 numerical or convergence error.

#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tcgrwa/errors.hpp"
#include "tcgrwa/sweep.hpp"

namespace tcgrwa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitNumerical = 3;

namespace detail {

// Writes through `emit` to the file at `path`, or to `fallback` for "" and "-".
inline void with_output(const std::string& path, std::ostream& fallback,
                        const std::function<void(std::ostream&)>& emit) {
    if (path.empty() || path == "-") {
        emit(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw ArgumentError("cannot open output file '" + path + "'");
    emit(file);
    if (!file) throw ArgumentError("failed writing output file '" + path + "'");
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Two-qubit Tavis-Cummings spectra and dynamics: exact, RWA, zeroth-order and GRWA"};
    app.require_subcommand(1);

    sweep::SpectrumRun spectrum;
    std::string spectrum_methods = "all";
    std::string spectrum_out;
    std::string spectrum_preset;
    auto* spec_cmd = app.add_subcommand("spectrum", "Lowest energy levels over a g/omega sweep");
    spec_cmd->add_option("--delta", spectrum.delta, "Delta/omega")->capture_default_str();
    spec_cmd->add_option("--g-min", spectrum.g_min, "first g/omega")->capture_default_str();
    spec_cmd->add_option("--g-max", spectrum.g_max, "last g/omega")->capture_default_str();
    spec_cmd->add_option("--g-steps", spectrum.g_steps, "grid points (inclusive)")->capture_default_str();
    spec_cmd->add_option("--n-trunc", spectrum.n_trunc, "Fock truncation N")->capture_default_str();
    spec_cmd->add_option("--levels", spectrum.levels, "levels per method")->capture_default_str();
    spec_cmd->add_option("--methods", spectrum_methods, "comma list of exact,grwa,rwa,zeroth or 'all'")
        ->capture_default_str();
    spec_cmd->add_option("--workers", spectrum.workers, "worker threads (0 = hardware)");
    spec_cmd->add_option("--preset", spectrum_preset, "fig1a | fig1b");
    spec_cmd->add_option("--out", spectrum_out, "CSV path ('-' for stdout)");

    sweep::DynamicsRun dyn;
    std::string dyn_methods = "all";
    std::string dyn_out;
    std::string dyn_preset;
    auto* dyn_cmd = app.add_subcommand("dynamics", "Spin populations after preparing |-1> x D(g/omega)|alpha>");
    dyn_cmd->add_option("--delta", dyn.delta, "Delta/omega")->capture_default_str();
    dyn_cmd->add_option("--g", dyn.g, "g/omega")->capture_default_str();
    dyn_cmd->add_option("--alpha", dyn.alpha, "coherent amplitude")->capture_default_str();
    dyn_cmd->add_option("--t-max", dyn.t_max, "final time (1/omega)")->capture_default_str();
    dyn_cmd->add_option("--dt", dyn.dt, "sampling step (1/omega)")->capture_default_str();
    dyn_cmd->add_option("--n-trunc", dyn.n_trunc, "Fock truncation N")->capture_default_str();
    dyn_cmd->add_option("--methods", dyn_methods, "comma list of exact,grwa,rwa,zeroth or 'all'")
        ->capture_default_str();
    dyn_cmd->add_option("--workers", dyn.workers, "worker threads (0 = hardware)");
    dyn_cmd->add_option("--preset", dyn_preset, "fig2a | fig2b | fig2c | fig2d");
    dyn_cmd->add_option("--out", dyn_out, "CSV path ('-' for stdout)");

    sweep::ConvergenceRun conv;
    std::string conv_out;
    auto* conv_cmd = app.add_subcommand("convergence", "Exact levels on a doubling ladder of truncations");
    conv_cmd->add_option("--delta", conv.delta, "Delta/omega")->capture_default_str();
    conv_cmd->add_option("--g", conv.g, "g/omega")->capture_default_str();
    conv_cmd->add_option("--levels", conv.levels, "levels per truncation")->capture_default_str();
    conv_cmd->add_option("--n-start", conv.n_start, "first truncation")->capture_default_str();
    conv_cmd->add_option("--n-max", conv.n_max, "largest truncation")->capture_default_str();
    conv_cmd->add_option("--out", conv_out, "CSV path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgument;
    }

    try {
        if (*spec_cmd) {
            if (!spectrum_preset.empty()) sweep::apply_preset(spectrum_preset, spectrum);
            spectrum.methods = sweep::parse_methods(spectrum_methods);
            const auto rows = sweep::run_spectrum(spectrum);
            detail::with_output(spectrum_out, out, [&](std::ostream& os) { sweep::write_spectrum_csv(os, rows); });
        } else if (*dyn_cmd) {
            if (!dyn_preset.empty()) sweep::apply_preset(dyn_preset, dyn);
            dyn.methods = sweep::parse_methods(dyn_methods);
            const auto rows = sweep::run_dynamics(dyn);
            detail::with_output(dyn_out, out, [&](std::ostream& os) { sweep::write_dynamics_csv(os, rows); });
        } else if (*conv_cmd) {
            const auto rows = sweep::run_convergence(conv);
            detail::with_output(conv_out, out, [&](std::ostream& os) { sweep::write_convergence_csv(os, rows); });
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitArgument;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ContractViolation& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

} // namespace tcgrwa::cli
