// dynamics.hpp - spin-population dynamics from a displaced coherent state

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "tcgrwa/adiabatic.hpp"
#include "tcgrwa/eigensolver.hpp"
#include "tcgrwa/grwa.hpp"
#include "tcgrwa/hilbert.hpp"
#include "tcgrwa/models.hpp"

namespace tcgrwa::dynamics {

struct DynamicsConfig {
    SystemParams params{1.0, 1.0, 0.1};
    double alpha{2.0};  // real coherent amplitude, <n> = alpha² = 4
    double t_max{50.0}; // units of 1/ω
    double dt{0.05};
    Method method{Method::exact};
    FockTruncation truncation{kDynamicsTruncation};

    void validate() const {
        params.validate();
        if (!(dt > 0.0) || !std::isfinite(dt)) throw ArgumentError("DynamicsConfig: dt must be positive");
        if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ArgumentError("DynamicsConfig: t_max must be >= 0");
        if (!std::isfinite(alpha) || alpha * alpha > static_cast<double>(truncation.n_max()) / 4.0)
            throw ArgumentError("DynamicsConfig: alpha^2 must not exceed N/4");
    }

    /// Uniform grid 0, dt, 2dt, ... up to t_max (inclusive within rounding).
    std::vector<double> time_grid() const {
        const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
        std::vector<double> times(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) times[k] = static_cast<double>(k) * dt;
        return times;
    }
};

/// Diagonal of the photon-traced spin density matrix.
struct SpinPopulations {
    double plus{0.0};
    double zero{0.0};
    double minus{0.0};

    double sum() const { return plus + zero + minus; }
};

struct TimeSeries {
    Method method{Method::exact};
    std::vector<double> times;
    std::vector<SpinPopulations> populations;
};

/// |-1> ⊗ D(g/ω)|α>: the coherent state displaced to the j_z = -1 equilibrium,
/// i.e. U†(|-1> ⊗ |α>).
inline QuantumState initial_state(const DynamicsConfig& config) {
    config.validate();
    const FockTruncation& t = config.truncation;
    const RealVector fock =
        hilbert::displacement(config.params.coupling_ratio(), t) * hilbert::coherent_state(config.alpha, t);
    QuantumState psi = QuantumState::product(-1, fock.cast<cplx>(), t);
    psi.normalize();
    return psi;
}

inline SpinPopulations spin_populations(const ComplexVector& amplitudes, FockTruncation t) {
    const auto d = static_cast<Eigen::Index>(t.fock_dim());
    if (amplitudes.size() != 3 * d) throw ArgumentError("spin_populations: dimension mismatch");
    return {amplitudes.segment(static_cast<Eigen::Index>(sector_of(+1)) * d, d).squaredNorm(),
            amplitudes.segment(static_cast<Eigen::Index>(sector_of(0)) * d, d).squaredNorm(),
            amplitudes.segment(static_cast<Eigen::Index>(sector_of(-1)) * d, d).squaredNorm()};
}

inline SpinPopulations spin_populations(const QuantumState& psi) {
    return spin_populations(psi.amplitudes(), psi.truncation());
}

/// Lab-frame eigenbasis used to propagate under the given method.
inline eigensolver::EigenDecomposition<double> method_eigensystem(Method method, const SystemParams& p,
                                                                  FockTruncation t) {
    switch (method) {
    case Method::exact: return models::exact_eigensystem(p, t);
    case Method::rwa: return models::rwa_eigensystem(p, t);
    case Method::zeroth: return adiabatic::zeroth_eigensystem(p, t);
    case Method::grwa: return grwa::grwa_eigensystem(p, t);
    }
    throw ArgumentError("method_eigensystem: unknown method");
}

inline constexpr double kCompletenessTolerance = 1e-6;

/// Expands the initial state over the method's eigenbasis and samples the spin
/// populations on the configured grid.
inline TimeSeries population_series(const DynamicsConfig& config) {
    const QuantumState psi0 = initial_state(config);
    const auto basis = method_eigensystem(config.method, config.params, config.truncation);
    const eigensolver::SpectralPropagator<double> propagator(basis, psi0.amplitudes());
    const double captured = propagator.captured_weight();
    if (captured < 1.0 - kCompletenessTolerance)
        throw NumericalError("population_series: " + std::string(to_string(config.method)) +
                             " eigenbasis captures only " + std::to_string(captured) + " of the initial state");

    TimeSeries series;
    series.method = config.method;
    series.times = config.time_grid();
    series.populations.reserve(series.times.size());
    for (double t : series.times)
        series.populations.push_back(spin_populations(propagator.at(t), config.truncation));
    return series;
}

} // namespace tcgrwa::dynamics
