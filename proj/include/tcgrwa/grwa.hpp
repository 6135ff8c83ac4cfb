// grwa.hpp - generalized rotating-wave approximation
//
// After the polaron transform the photon-free spin Hamiltonian
// Δβ J_x - (g²/ω) J_z² is diagonalized by the dressed basis S. Keeping the
// photon-diagonal renormalization Δ J_x [G0(a†a) - β] on the dressed diagonal
// and only the energy-conserving half of the one-photon term
// (Δ/2) F1(a†a)(a† - a)(J_+ - J_-) yields an RWA-shaped Hamiltonian that
// conserves (photons + dressed index). It splits into the singleton |-1,0>,
// the 2x2 block (|-1,1>, |0,0>) and 3x3 blocks (|-1,n+1>, |0,n>, |+1,n-1>).

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "tcgrwa/eigensolver.hpp"
#include "tcgrwa/hilbert.hpp"
#include "tcgrwa/models.hpp"
#include "tcgrwa/specfun.hpp"

namespace tcgrwa::grwa {

/// Eigenbasis of the photon-free spin Hamiltonian Δβ J_x - (g²/ω) J_z².
struct DressedSpinBasis {
    double beta{1.0};
    double chi0{0.0};
    double mu_plus{0.0};
    double mu_minus{0.0};
    double lambda_plus{0.0};
    double lambda_minus{0.0};
    double eps_plus{0.0};
    double eps_minus{0.0};
    double eps_zero{0.0};
    /// Rows are bare spins (+1, 0, -1); columns are dressed states (-, 0, +).
    Eigen::Matrix3d S{Eigen::Matrix3d::Identity()};
};

inline DressedSpinBasis dressed_spin(const SystemParams& p) {
    p.validate();
    if (p.delta <= 0.0)
        throw ArgumentError("dressed_spin: delta = 0 makes chi0 diverge; use the exact "
                            "displaced-oscillator solution E = omega*n - g^2 j^2/omega instead");
    DressedSpinBasis b;
    b.beta = specfun::beta(p);
    b.chi0 = std::sqrt(2.0) * p.g * p.g / (p.omega * p.delta * b.beta);
    const double root = std::sqrt(b.chi0 * b.chi0 + 8.0);
    b.mu_plus = 0.5 * (b.chi0 + root);
    b.mu_minus = -2.0 / b.mu_plus; // (χ0 - root)/2 without the cancellation
    b.lambda_plus = std::sqrt(2.0 + b.mu_plus * b.mu_plus);
    b.lambda_minus = std::sqrt(2.0 + b.mu_minus * b.mu_minus);
    const double scale = p.delta * b.beta / (2.0 * std::sqrt(2.0));
    b.eps_plus = scale * 8.0 / (b.chi0 + root); // scale * (-χ0 + root)
    b.eps_minus = -scale * (b.chi0 + root);
    b.eps_zero = -p.g * p.g / p.omega;

    const double s = 1.0 / std::sqrt(2.0);
    b.S << 1.0 / b.lambda_minus, s, 1.0 / b.lambda_plus,
           b.mu_minus / b.lambda_minus, 0.0, b.mu_plus / b.lambda_plus,
           1.0 / b.lambda_minus, -s, 1.0 / b.lambda_plus;
    return b;
}

/// ξ_{-,m} = ε_- + 2√2 μ_- Δ [G0(m) - β] / λ_-².
inline double xi_minus(int m, const DressedSpinBasis& b, const SystemParams& p) {
    return b.eps_minus + 2.0 * std::sqrt(2.0) * b.mu_minus * p.delta * (specfun::g0(m, p) - b.beta) /
                             (b.lambda_minus * b.lambda_minus);
}

/// ξ_{+,m} = ε_+ + 2√2 μ_+ Δ [G0(m) - β] / λ_+².
inline double xi_plus(int m, const DressedSpinBasis& b, const SystemParams& p) {
    return b.eps_plus + 2.0 * std::sqrt(2.0) * b.mu_plus * p.delta * (specfun::g0(m, p) - b.beta) /
                            (b.lambda_plus * b.lambda_plus);
}

/// κ_n = Δ <n-1|F1(a†a) a|n> = Δ (g/ω) e^{-g²/2ω²} L¹_{n-1}(g²/ω²) / √n.
/// The matrix element already carries the √n of the ladder operator.
inline double grwa_coupling(int n, const SystemParams& p) {
    if (n < 1) throw ArgumentError("grwa_coupling: photon index must be >= 1");
    return p.delta * specfun::f1_element(n - 1, p);
}

struct GrwaBlock {
    HamiltonianBlock block;
    double xi_minus{0.0};
    double xi_plus{0.0};
    double lower_coupling{0.0}; // entry between |-1,n+1> and |0,n>
    double upper_coupling{0.0}; // entry between |0,n> and |+1,n-1>
};

/// Block n >= 1 on dressed labels (|-1,n+1>, |0,n>, |+1,n-1>).
inline GrwaBlock grwa_block(int n, const SystemParams& p, const DressedSpinBasis& b) {
    if (n < 1) throw ArgumentError("grwa_block: excitation index must be >= 1");
    GrwaBlock out;
    out.xi_minus = xi_minus(n + 1, b, p);
    out.xi_plus = xi_plus(n - 1, b, p);
    out.lower_coupling = -(b.mu_minus / b.lambda_minus) * grwa_coupling(n + 1, p);
    out.upper_coupling = (b.mu_plus / b.lambda_plus) * grwa_coupling(n, p);

    RealMatrix m = RealMatrix::Zero(3, 3);
    m(0, 0) = p.omega * (n + 1) + out.xi_minus;
    m(1, 1) = p.omega * n + b.eps_zero;
    m(2, 2) = p.omega * (n - 1) + out.xi_plus;
    m(0, 1) = m(1, 0) = out.lower_coupling;
    m(1, 2) = m(2, 1) = out.upper_coupling;
    out.block = HamiltonianBlock{{{-1, n + 1}, {0, n}, {+1, n - 1}}, std::move(m)};
    return out;
}

inline GrwaBlock grwa_block(int n, const SystemParams& p) { return grwa_block(n, p, dressed_spin(p)); }

/// The n = 0 sector on (|-1,1>, |0,0>).
inline GrwaBlock grwa_block0(const SystemParams& p, const DressedSpinBasis& b) {
    GrwaBlock out;
    out.xi_minus = xi_minus(1, b, p);
    out.lower_coupling = -(b.mu_minus / b.lambda_minus) * grwa_coupling(1, p);
    RealMatrix m(2, 2);
    m << p.omega + out.xi_minus, out.lower_coupling,
         out.lower_coupling, b.eps_zero;
    out.block = HamiltonianBlock{{{-1, 1}, {0, 0}}, std::move(m)};
    return out;
}

inline GrwaBlock grwa_block0(const SystemParams& p) { return grwa_block0(p, dressed_spin(p)); }

struct LevelPair {
    double lower{0.0};
    double upper{0.0};
};

/// Closed-form eigenvalues of the n = 0 block,
/// E_{1,±} = (ε0 + ω + ξ_{-,1})/2 ± ½ sqrt((ε0 - ω - ξ_{-,1})² + 4 (μ_- κ_1/λ_-)²).
inline LevelPair first_excited_pair(const SystemParams& p) {
    const DressedSpinBasis b = dressed_spin(p);
    const double xi = xi_minus(1, b, p);
    const double c = b.mu_minus * grwa_coupling(1, p) / b.lambda_minus;
    const double mean = 0.5 * (b.eps_zero + p.omega + xi);
    const double diff = b.eps_zero - p.omega - xi;
    const double half = 0.5 * std::sqrt(diff * diff + 4.0 * c * c);
    return {mean - half, mean + half};
}

/// Energy of the uncoupled state |-1,0>: ε_- (since G0(0) = β).
inline double grwa_ground(const SystemParams& p) { return dressed_spin(p).eps_minus; }

/// Ground singleton, the n = 0 block and blocks 1..N+1, trimmed to the
/// truncated basis so that every dressed |d, m> with m <= N appears once.
inline std::vector<HamiltonianBlock> grwa_blocks(const SystemParams& p, FockTruncation t) {
    const DressedSpinBasis b = dressed_spin(p);
    std::vector<HamiltonianBlock> blocks;
    blocks.push_back(HamiltonianBlock{{{-1, 0}}, RealMatrix::Constant(1, 1, xi_minus(0, b, p))});
    blocks.push_back(grwa_block0(p, b).block);
    const int top = static_cast<int>(t.n_max()) + 1;
    for (int n = 1; n <= top; ++n) blocks.push_back(grwa_block(n, p, b).block.trimmed(t.n_max()));
    return blocks;
}

/// Maps dressed-frame product vectors (dressed index d stored in sector slot
/// sector_of(d)) to bare spin components: (S ⊗ I).
inline RealMatrix dressed_to_bare(const DressedSpinBasis& b, const RealMatrix& dressed, FockTruncation t) {
    const auto d = static_cast<Eigen::Index>(t.fock_dim());
    RealMatrix bare = RealMatrix::Zero(dressed.rows(), dressed.cols());
    for (int s : kSpinProjections) {
        const auto row = static_cast<Eigen::Index>(sector_of(s));
        for (int dressed_index : kSpinProjections) {
            const double coeff = b.S(row, dressed_index + 1);
            if (coeff == 0.0) continue;
            bare.middleRows(row * d, d) += coeff * dressed.middleRows(static_cast<Eigen::Index>(sector_of(dressed_index)) * d, d);
        }
    }
    return bare;
}

/// Complete GRWA eigenbasis in the lab frame: block eigenvectors |φ>, mapped
/// by S to the bare spin basis and by U† out of the polaron frame.
inline eigensolver::EigenDecomposition<double> grwa_eigensystem(const SystemParams& p, FockTruncation t) {
    const DressedSpinBasis b = dressed_spin(p);
    auto d = models::assemble_block_eigensystem(grwa_blocks(p, t), t);
    const hilbert::PolaronTransform frame(p, t);
    d.vectors = frame.apply_inverse(dressed_to_bare(b, d.vectors, t));
    return d;
}

inline std::vector<QuantumState> grwa_eigenstates(const SystemParams& p, FockTruncation t, std::size_t levels) {
    models::check_levels(levels, t);
    const auto d = grwa_eigensystem(p, t);
    std::vector<QuantumState> out;
    out.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        QuantumState s(t, d.vectors.col(static_cast<Eigen::Index>(k)).cast<cplx>());
        out.push_back(std::move(s.normalize()));
    }
    return out;
}

inline SpectrumResult grwa_spectrum(const SystemParams& p, FockTruncation t, std::size_t levels,
                                    bool with_states = false) {
    models::check_levels(levels, t);
    SpectrumResult result{Method::grwa, p, t, {}, std::nullopt};
    if (with_states) {
        const auto d = grwa_eigensystem(p, t);
        result.energies = d.values.head(static_cast<Eigen::Index>(levels));
        result.states = RealMatrix(d.vectors.leftCols(static_cast<Eigen::Index>(levels)));
    } else {
        result.energies = models::lowest_block_energies(grwa_blocks(p, t), levels);
    }
    return result;
}

} // namespace tcgrwa::grwa
