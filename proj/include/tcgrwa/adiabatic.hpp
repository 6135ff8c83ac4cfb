// adiabatic.hpp - zeroth-order (adiabatic) approximation in the polaron frame

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "tcgrwa/eigensolver.hpp"
#include "tcgrwa/hilbert.hpp"
#include "tcgrwa/models.hpp"
#include "tcgrwa/specfun.hpp"

namespace tcgrwa::adiabatic {

enum class Branch { minus, zero, plus };

struct ZerothEnergies {
    double plus{0.0};
    double zero{0.0};
    double minus{0.0};
};

/// One zeroth-order level at photon index n. Weights are on (|+1>, |0>, |-1>)
/// and unnormalized: (1, 0, -1) for the zero branch, (1, μ, 1) for the others.
struct ZerothLevel {
    int n{0};
    Branch branch{Branch::zero};
    double energy{0.0};
    Eigen::Vector3d spin_weights{Eigen::Vector3d::Zero()};
};

// Below this |G0(n)| the closed-form weights are replaced by the numerical route.
inline constexpr double kSingularG0 = 1e-10;

/// Photon-diagonal Hamiltonian at fixed n after dropping the one-photon terms:
/// diagonal (ωn - g²/ω, ωn, ωn - g²/ω), nearest-neighbour (Δ/√2) G0(n).
inline Eigen::Matrix3d zeroth_matrix(int n, const SystemParams& p) {
    const double shift = p.g * p.g / p.omega;
    const double c = p.delta * specfun::g0(n, p) / std::sqrt(2.0);
    const double wn = p.omega * n;
    Eigen::Matrix3d m;
    m << wn - shift, c, 0.0,
         c, wn, c,
         0.0, c, wn - shift;
    return m;
}

/// ε_{±,n} = (ω/2)(2n - g²/ω² ± sqrt((g/ω)⁴ + 4(Δ G0(n)/ω)²)), ε_{0,n} = ωn - g²/ω.
/// Regular at zeros of G0(n).
inline ZerothEnergies zeroth_energies(int n, const SystemParams& p) {
    if (n < 0) throw ArgumentError("zeroth_energies: photon index must be >= 0");
    const double x = p.laguerre_argument();
    const double s = p.delta * specfun::g0(n, p) / p.omega;
    const double root = std::sqrt(x * x + 4.0 * s * s);
    const double centre = 2.0 * n - x;
    return {0.5 * p.omega * (centre + root), p.omega * n - p.g * p.g / p.omega, 0.5 * p.omega * (centre - root)};
}

/// χ_n = √2 g² / (ω Δ G0(n)); infinite when Δ G0(n) = 0.
inline double chi(int n, const SystemParams& p) {
    return std::sqrt(2.0) * p.g * p.g / (p.omega * p.delta * specfun::g0(n, p));
}

/// The three levels at photon index n ordered (minus, zero, plus).
///
/// The symmetric weights (1, μ, 1) solve μ² - χ_n μ - 2 = 0. Which root
/// belongs to ε_+ depends on the sign of G0(n), so roots are matched to
/// branches by their energy ωn - g²/ω + (Δ G0(n)/√2) μ rather than by the
/// ± label of the root. When |G0(n)| is tiny the quadratic is ill-conditioned
/// and the symmetric 2x2 sub-block is diagonalized instead.
inline std::array<ZerothLevel, 3> zeroth_levels(int n, const SystemParams& p) {
    const ZerothEnergies e = zeroth_energies(n, p);
    const double g0 = specfun::g0(n, p);
    std::array<ZerothLevel, 3> out{ZerothLevel{n, Branch::minus, e.minus, {}},
                                   ZerothLevel{n, Branch::zero, e.zero, {1.0, 0.0, -1.0}},
                                   ZerothLevel{n, Branch::plus, e.plus, {}}};

    const double coupling = p.delta * g0 / std::sqrt(2.0);
    if (std::abs(g0) >= kSingularG0 && p.delta > 0.0) {
        const double chi_n = chi(n, p);
        const double big = 0.5 * (chi_n + std::copysign(std::sqrt(chi_n * chi_n + 8.0), chi_n));
        const double small = -2.0 / big;
        const double base = p.omega * n - p.g * p.g / p.omega;
        const bool big_is_upper = base + coupling * big > base + coupling * small;
        out[2].spin_weights = {1.0, big_is_upper ? big : small, 1.0};
        out[0].spin_weights = {1.0, big_is_upper ? small : big, 1.0};
        return out;
    }

    // Symmetric sector spanned by (1,0,1)/√2 and (0,1,0).
    const Eigen::Matrix3d m = zeroth_matrix(n, p);
    Eigen::Matrix2d sym;
    sym << m(0, 0), std::sqrt(2.0) * m(0, 1),
           std::sqrt(2.0) * m(0, 1), m(1, 1);
    const auto d = eigensolver::eigh(sym);
    for (int k = 0; k < 2; ++k) {
        const Eigen::Vector2d v = d.vectors.col(k);
        const Eigen::Vector3d w(v(0) / std::sqrt(2.0), v(1), v(0) / std::sqrt(2.0));
        out[k == 0 ? 0 : 2].spin_weights = w;
    }
    return out;
}

namespace detail {

inline Eigen::Vector3d normalized_weights(const ZerothLevel& level) {
    return level.spin_weights.normalized();
}

// U† (w ⊗ |n>) for normalized spin weights w.
inline RealVector lab_frame_state(const Eigen::Vector3d& w, int n, const hilbert::PolaronTransform& frame) {
    const FockTruncation& t = frame.truncation();
    const auto d = static_cast<Eigen::Index>(t.fock_dim());
    RealVector out = RealVector::Zero(3 * d);
    for (int jz : kSpinProjections) {
        const auto s = static_cast<Eigen::Index>(sector_of(jz));
        if (w(s) == 0.0) continue;
        // column n of D(-j_z g/ω) = row n of D(j_z g/ω)
        out.segment(s * d, d) = w(s) * frame.sector_block(jz).row(n).transpose();
    }
    return out;
}

} // namespace detail

/// Normalized lab-frame eigenstates U†(w ⊗ |n>) ordered (minus, zero, plus).
inline std::array<QuantumState, 3> zeroth_states(int n, const SystemParams& p, FockTruncation t) {
    if (n < 0 || static_cast<std::size_t>(n) > t.n_max() / 2)
        throw ArgumentError("zeroth_states: photon index must lie in [0, N/2]");
    const hilbert::PolaronTransform frame(p, t);
    const auto levels = zeroth_levels(n, p);
    std::array<QuantumState, 3> out{QuantumState(t), QuantumState(t), QuantumState(t)};
    for (std::size_t k = 0; k < 3; ++k)
        out[k].amplitudes() =
            detail::lab_frame_state(detail::normalized_weights(levels[k]), n, frame).cast<cplx>();
    return out;
}

/// The complete zeroth-order basis for n = 0..N in the lab frame, ascending in energy.
inline eigensolver::EigenDecomposition<double> zeroth_eigensystem(const SystemParams& p, FockTruncation t) {
    p.validate();
    const hilbert::PolaronTransform frame(p, t);
    const auto dim = static_cast<Eigen::Index>(t.dim());
    eigensolver::EigenDecomposition<double> out{Eigen::VectorXd(dim), RealMatrix(dim, dim)};
    Eigen::Index column = 0;
    for (int n = 0; n <= static_cast<int>(t.n_max()); ++n) {
        for (const auto& level : zeroth_levels(n, p)) {
            out.values(column) = level.energy;
            out.vectors.col(column) = detail::lab_frame_state(detail::normalized_weights(level), n, frame);
            ++column;
        }
    }
    return eigensolver::sorted(std::move(out));
}

inline SpectrumResult zeroth_spectrum(const SystemParams& p, FockTruncation t, std::size_t levels,
                                      bool with_states = false) {
    p.validate();
    models::check_levels(levels, t);
    const auto count = static_cast<Eigen::Index>(levels);
    SpectrumResult result{Method::zeroth, p, t, {}, std::nullopt};
    if (with_states) {
        const auto d = zeroth_eigensystem(p, t);
        result.energies = d.values.head(count);
        result.states = RealMatrix(d.vectors.leftCols(count));
        return result;
    }
    std::vector<double> all;
    all.reserve(t.dim());
    for (int n = 0; n <= static_cast<int>(t.n_max()); ++n) {
        const ZerothEnergies e = zeroth_energies(n, p);
        all.insert(all.end(), {e.minus, e.zero, e.plus});
    }
    std::sort(all.begin(), all.end());
    result.energies = Eigen::Map<const Eigen::VectorXd>(all.data(), count);
    return result;
}

} // namespace tcgrwa::adiabatic
