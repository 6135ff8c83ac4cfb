// sweep.hpp - parameter sweeps, dynamics runs and convergence ladders with CSV output

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tcgrwa/adiabatic.hpp"
#include "tcgrwa/dynamics.hpp"
#include "tcgrwa/grwa.hpp"
#include "tcgrwa/models.hpp"

namespace tcgrwa::sweep {

/// Runs fn(0..count-1) on a small worker pool; results come back in index
/// order. The first exception thrown by any task is rethrown after all
/// workers stop.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn, unsigned workers = 0) {
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(count);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
    }
    if (error) std::rethrow_exception(error);

    std::vector<Result> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

/// 12 significant digits, shortest general form, locale independent.
inline std::string format_number(double x) {
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x, std::chars_format::general, 12);
    if (ec != std::errc{}) throw NumericalError("format_number: conversion failed");
    return std::string(buffer, end);
}

/// Canonical (lexical) method order with duplicates removed.
inline std::vector<Method> canonical_methods(const std::vector<Method>& methods) {
    if (methods.empty()) throw ArgumentError("at least one method is required");
    std::set<Method> unique(methods.begin(), methods.end());
    return {unique.begin(), unique.end()};
}

inline std::vector<Method> parse_methods(std::string_view list) {
    std::vector<Method> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string_view item = list.substr(start, comma - start);
        if (item == "all")
            out.insert(out.end(), kAllMethods.begin(), kAllMethods.end());
        else
            out.push_back(parse_method(item));
        start = comma + 1;
    }
    return canonical_methods(out);
}

inline SpectrumResult method_spectrum(Method m, const SystemParams& p, FockTruncation t, std::size_t levels) {
    switch (m) {
    case Method::exact: return models::exact_spectrum(p, t, levels);
    case Method::grwa: return grwa::grwa_spectrum(p, t, levels);
    case Method::rwa: return models::rwa_spectrum(p, t, levels);
    case Method::zeroth: return adiabatic::zeroth_spectrum(p, t, levels);
    }
    throw ArgumentError("method_spectrum: unknown method");
}

// --- spectrum ----------------------------------------------------------------

struct SpectrumRun {
    double delta{0.5};
    double g_min{0.0};
    double g_max{1.0};
    std::size_t g_steps{101};
    std::size_t n_trunc{kSpectrumTruncation};
    std::size_t levels{8};
    std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
    unsigned workers{0};

    void validate() const {
        if (g_steps == 0) throw ArgumentError("spectrum: g-steps must be positive");
        if (!(g_max >= g_min)) throw ArgumentError("spectrum: g-max must be >= g-min");
        if (g_min < 0.0) throw ArgumentError("spectrum: g-min must be >= 0");
        canonical_methods(methods);
    }

    std::vector<double> grid() const {
        std::vector<double> g(g_steps);
        for (std::size_t i = 0; i < g_steps; ++i)
            g[i] = g_steps == 1 ? g_min
                                : g_min + (g_max - g_min) * static_cast<double>(i) / static_cast<double>(g_steps - 1);
        return g;
    }
};

struct SpectrumRow {
    double g_over_omega{0.0};
    Method method{Method::exact};
    std::size_t level{0};
    double energy_over_omega{0.0};
};

/// Rows ordered by g ascending, then method (lexical), then level.
inline std::vector<SpectrumRow> run_spectrum(const SpectrumRun& run) {
    run.validate();
    const auto methods = canonical_methods(run.methods);
    const auto grid = run.grid();
    const FockTruncation t(run.n_trunc);
    auto per_point = parallel_map(
        grid.size(),
        [&](std::size_t i) {
            const SystemParams p{run.delta, 1.0, grid[i]};
            std::vector<SpectrumRow> rows;
            for (Method m : methods) {
                const SpectrumResult s = method_spectrum(m, p, t, run.levels);
                for (Eigen::Index k = 0; k < s.energies.size(); ++k)
                    rows.push_back({p.coupling_ratio(), m, static_cast<std::size_t>(k), s.energies(k) / p.omega});
            }
            return rows;
        },
        run.workers);
    std::vector<SpectrumRow> out;
    for (auto& rows : per_point) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

inline void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
    os << "g_over_omega,method,level_index,energy_over_omega\n";
    for (const auto& r : rows)
        os << format_number(r.g_over_omega) << ',' << to_string(r.method) << ',' << r.level << ','
           << format_number(r.energy_over_omega) << '\n';
}

// --- dynamics ----------------------------------------------------------------

struct DynamicsRun {
    double delta{1.0};
    double g{0.1};
    double alpha{2.0};
    double t_max{50.0};
    double dt{0.05};
    std::size_t n_trunc{kDynamicsTruncation};
    std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
    unsigned workers{0};
};

struct DynamicsRow {
    double t_omega{0.0};
    Method method{Method::exact};
    dynamics::SpinPopulations populations;
};

/// One block of rows per method, methods in lexical order.
inline std::vector<DynamicsRow> run_dynamics(const DynamicsRun& run) {
    const auto methods = canonical_methods(run.methods);
    auto series = parallel_map(
        methods.size(),
        [&](std::size_t i) {
            dynamics::DynamicsConfig config{SystemParams{run.delta, 1.0, run.g}, run.alpha, run.t_max, run.dt,
                                            methods[i], FockTruncation(run.n_trunc)};
            return dynamics::population_series(config);
        },
        run.workers);
    std::vector<DynamicsRow> rows;
    for (const auto& s : series)
        for (std::size_t k = 0; k < s.times.size(); ++k) rows.push_back({s.times[k], s.method, s.populations[k]});
    return rows;
}

inline void write_dynamics_csv(std::ostream& os, const std::vector<DynamicsRow>& rows) {
    os << "t_omega,method,P_plus1,P_zero,P_minus1,P_minus1_squared\n";
    for (const auto& r : rows)
        os << format_number(r.t_omega) << ',' << to_string(r.method) << ',' << format_number(r.populations.plus)
           << ',' << format_number(r.populations.zero) << ',' << format_number(r.populations.minus) << ','
           << format_number(r.populations.minus * r.populations.minus) << '\n';
}

// --- convergence -------------------------------------------------------------

struct ConvergenceRun {
    double delta{1.0};
    double g{1.0};
    std::size_t levels{6};
    std::size_t n_start{15};
    std::size_t n_max{120};
};

struct ConvergenceRow {
    std::size_t n_trunc{0};
    std::size_t level{0};
    double energy_over_omega{0.0};
};

/// Lowest levels of the lab-frame Hamiltonian on the ladder N = n_start, 2 n_start, ... <= n_max.
inline std::vector<ConvergenceRow> run_convergence(const ConvergenceRun& run) {
    if (run.n_start < 1 || run.n_max < run.n_start)
        throw ArgumentError("convergence: need 1 <= n-start <= n-max");
    if (run.levels == 0 || run.levels > run.n_start + 1)
        throw ArgumentError("convergence: levels must lie in [1, n-start + 1]");
    std::vector<std::size_t> ladder;
    for (std::size_t n = run.n_start; n <= run.n_max; n *= 2) ladder.push_back(n);
    const SystemParams p{run.delta, 1.0, run.g};
    auto spectra = parallel_map(ladder.size(), [&](std::size_t i) {
        return eigensolver::eigvalsh(models::build_full_hamiltonian(p, FockTruncation(ladder[i])));
    });
    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < ladder.size(); ++i)
        for (std::size_t k = 0; k < run.levels; ++k)
            rows.push_back({ladder[i], k, spectra[i](static_cast<Eigen::Index>(k)) / p.omega});
    return rows;
}

inline void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << "N,level_index,energy_over_omega\n";
    for (const auto& r : rows) os << r.n_trunc << ',' << r.level << ',' << format_number(r.energy_over_omega) << '\n';
}

// --- presets -----------------------------------------------------------------

struct Preset {
    std::string_view name;
    bool spectrum; // false: dynamics
    double delta;
    double g;      // unused for spectrum presets
};

// Named parameter sets: energy levels at Δ/ω = 0.5 and 1; population
// dynamics at (Δ/ω, g/ω) = (1, 0.1), (1, 0.3), (0.5, 0.1), (0.5, 1).
inline constexpr std::array<Preset, 6> kPresets{{
    {"fig1a", true, 0.5, 0.0},
    {"fig1b", true, 1.0, 0.0},
    {"fig2a", false, 1.0, 0.1},
    {"fig2b", false, 1.0, 0.3},
    {"fig2c", false, 0.5, 0.1},
    {"fig2d", false, 0.5, 1.0},
}};

inline const Preset& find_preset(std::string_view name) {
    for (const auto& p : kPresets)
        if (p.name == name) return p;
    throw ArgumentError("unknown preset '" + std::string(name) + "'");
}

inline void apply_preset(std::string_view name, SpectrumRun& run) {
    const Preset& p = find_preset(name);
    if (!p.spectrum) throw ArgumentError("preset '" + std::string(name) + "' is a dynamics preset");
    run.delta = p.delta;
}

inline void apply_preset(std::string_view name, DynamicsRun& run) {
    const Preset& p = find_preset(name);
    if (p.spectrum) throw ArgumentError("preset '" + std::string(name) + "' is a spectrum preset");
    run.delta = p.delta;
    run.g = p.g;
}

} // namespace tcgrwa::sweep
