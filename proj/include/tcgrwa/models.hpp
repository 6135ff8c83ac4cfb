// models.hpp - lab-frame Hamiltonian, RWA blocks and the exact/RWA spectra

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tcgrwa/eigensolver.hpp"
#include "tcgrwa/errors.hpp"
#include "tcgrwa/hilbert.hpp"
#include "tcgrwa/params.hpp"

namespace tcgrwa {

/// |spin, photons>. For RWA blocks `spin` is the bare j_z of the rotated frame,
/// for GRWA blocks it is the dressed-spin index (-1, 0, +1).
struct BasisLabel {
    int spin{0};
    int photons{0};
    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

/// A small real-symmetric matrix together with the basis states it acts on.
struct HamiltonianBlock {
    std::vector<BasisLabel> labels;
    RealMatrix matrix;

    std::size_t size() const { return labels.size(); }

    void validate() const {
        if (matrix.rows() != static_cast<Eigen::Index>(labels.size()) || matrix.cols() != matrix.rows())
            throw ArgumentError("HamiltonianBlock: matrix size does not match labels");
        if (std::set<BasisLabel>(labels.begin(), labels.end()).size() != labels.size())
            throw ArgumentError("HamiltonianBlock: duplicate labels");
        if (matrix.size() > 0 && eigensolver::hermiticity_error(matrix) > 1e-14 * std::max(1.0, matrix.cwiseAbs().maxCoeff()))
            throw ContractViolation("HamiltonianBlock: matrix is not symmetric");
    }

    /// Drops labels whose photon number exceeds the truncation, with their rows and columns.
    HamiltonianBlock trimmed(std::size_t n_max) const {
        std::vector<Eigen::Index> keep;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i].photons >= 0 && static_cast<std::size_t>(labels[i].photons) <= n_max)
                keep.push_back(static_cast<Eigen::Index>(i));
        HamiltonianBlock out;
        out.matrix.resize(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i) {
            out.labels.push_back(labels[static_cast<std::size_t>(keep[i])]);
            for (std::size_t j = 0; j < keep.size(); ++j)
                out.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = matrix(keep[i], keep[j]);
        }
        return out;
    }
};

struct SpectrumResult {
    Method method{Method::exact};
    SystemParams params;
    FockTruncation truncation{kSpectrumTruncation};
    Eigen::VectorXd energies; // ascending, units of ω
    std::optional<RealMatrix> states; // lab-frame eigenvectors as columns, when requested
};

namespace models {

/// H = Δ J_x ⊗ I + ω I ⊗ a†a + g J_z ⊗ (a + a†).
inline RealMatrix build_full_hamiltonian(const SystemParams& p, FockTruncation t) {
    p.validate();
    const RealMatrix a = hilbert::annihilation(t);
    const RealMatrix x = a + a.transpose();
    return p.delta * hilbert::embed(hilbert::spin_x(), RealMatrix::Identity(t.fock_dim(), t.fock_dim())) +
           p.omega * hilbert::embed(Eigen::Matrix3d::Identity(), hilbert::number(t)) +
           p.g * hilbert::embed(hilbert::spin_z(), x);
}

/// Spin rotation W = exp(-i(π/2)J_y), real in this basis, with
/// W J_x Wᵀ = -J_z and W J_z Wᵀ = J_x.
inline Eigen::Matrix3d frame_rotation() {
    const double h = 0.5;
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3d w;
    w << h, -s, h,
         s, 0.0, -s,
         h, s, h;
    return w;
}

inline RealMatrix frame_rotation(FockTruncation t) {
    return hilbert::embed(frame_rotation(), RealMatrix::Identity(t.fock_dim(), t.fock_dim()));
}

/// The same Hamiltonian after the spin rotation: -Δ J_z + ω a†a + g (a + a†) J_x.
inline RealMatrix build_rotated_hamiltonian(const SystemParams& p, FockTruncation t) {
    p.validate();
    const RealMatrix a = hilbert::annihilation(t);
    return -p.delta * hilbert::embed(hilbert::spin_z(), RealMatrix::Identity(t.fock_dim(), t.fock_dim())) +
           p.omega * hilbert::embed(Eigen::Matrix3d::Identity(), hilbert::number(t)) +
           p.g * hilbert::embed(hilbert::spin_x(), a + a.transpose());
}

inline eigensolver::EigenDecomposition<double> exact_eigensystem(const SystemParams& p, FockTruncation t) {
    return eigensolver::eigh(build_full_hamiltonian(p, t));
}

inline void check_levels(std::size_t levels, FockTruncation t) {
    if (levels == 0) throw ArgumentError("level count must be positive");
    if (levels > t.fock_dim())
        throw ArgumentError("requested " + std::to_string(levels) + " levels but only " +
                            std::to_string(t.fock_dim()) + " lie safely below the truncation edge");
}

inline constexpr double kCertificationTolerance = 1e-8;

/// Lowest `levels` eigenvalues of the lab-frame Hamiltonian. Each one is
/// certified by repeating the diagonalization at truncation 2N; a shift of
/// 1e-8 ω or more raises NumericalError naming the first offending level.
inline SpectrumResult exact_spectrum(const SystemParams& p, FockTruncation t, std::size_t levels,
                                     bool with_states = false) {
    check_levels(levels, t);
    const auto n = static_cast<Eigen::Index>(levels);
    SpectrumResult result{Method::exact, p, t, {}, std::nullopt};
    Eigen::VectorXd coarse;
    if (with_states) {
        auto decomp = exact_eigensystem(p, t);
        coarse = decomp.values;
        result.states = RealMatrix(decomp.vectors.leftCols(n));
    } else {
        coarse = eigensolver::eigvalsh(build_full_hamiltonian(p, t));
    }
    const Eigen::VectorXd fine = eigensolver::eigvalsh(build_full_hamiltonian(p, t.doubled()));
    for (Eigen::Index k = 0; k < n; ++k) {
        const double shift = std::abs(coarse(k) - fine(k));
        if (!(shift < kCertificationTolerance * p.omega))
            throw NumericalError("exact_spectrum: level " + std::to_string(k) + " not converged at N=" +
                                 std::to_string(t.n_max()) + " (shift " + std::to_string(shift) +
                                 " under N -> 2N); increase the truncation");
    }
    result.energies = coarse.head(n);
    return result;
}

// --- Rotating-wave approximation --------------------------------------------
//
// In the rotated frame the free part -Δ J_z + ω a†a puts |+1> lowest, so the
// energy-conserving pair of the interaction is (g/2)(a† J_+ + a J_-) and the
// conserved excitation is a†a - J_z. Block n >= 1 couples
// |-1, n-1>, |0, n>, |+1, n+1>; block 0 is (|0,0>, |+1,1>) and |+1,0> is alone.

/// The 3x3 RWA block for excitation n >= 1 on (|-1,n-1>, |0,n>, |+1,n+1>).
inline HamiltonianBlock rwa_block(int n, const SystemParams& p) {
    if (n < 1) throw ArgumentError("rwa_block: excitation index must be >= 1");
    const double w = p.omega;
    const double c = std::sqrt(0.5) * p.g;
    HamiltonianBlock b{{{-1, n - 1}, {0, n}, {+1, n + 1}}, RealMatrix::Zero(3, 3)};
    b.matrix(0, 0) = w * (n - 1) + p.delta;
    b.matrix(1, 1) = w * n;
    b.matrix(2, 2) = w * (n + 1) - p.delta;
    b.matrix(0, 1) = b.matrix(1, 0) = c * std::sqrt(static_cast<double>(n));
    b.matrix(1, 2) = b.matrix(2, 1) = c * std::sqrt(n + 1.0);
    return b;
}

/// The n = 0 sector (|0,0>, |+1,1>).
inline HamiltonianBlock rwa_block0(const SystemParams& p) {
    HamiltonianBlock b{{{0, 0}, {+1, 1}}, RealMatrix::Zero(2, 2)};
    b.matrix(0, 0) = 0.0;
    b.matrix(1, 1) = p.omega - p.delta;
    b.matrix(0, 1) = b.matrix(1, 0) = std::sqrt(0.5) * p.g;
    return b;
}

/// |+1, 0>, uncoupled under the RWA.
inline HamiltonianBlock rwa_singleton(const SystemParams& p) {
    HamiltonianBlock b{{{+1, 0}}, RealMatrix::Constant(1, 1, -p.delta)};
    return b;
}

/// All RWA blocks restricted to the truncated basis. Every state |j, m> with
/// m <= N appears in exactly one block; blocks N and N+1 lose their top labels.
inline std::vector<HamiltonianBlock> rwa_blocks(const SystemParams& p, FockTruncation t) {
    p.validate();
    std::vector<HamiltonianBlock> blocks{rwa_singleton(p), rwa_block0(p)};
    const int top = static_cast<int>(t.n_max()) + 1;
    for (int n = 1; n <= top; ++n) blocks.push_back(rwa_block(n, p).trimmed(t.n_max()));
    return blocks;
}

/// Operator form of the RWA Hamiltonian in the rotated frame,
/// -Δ J_z + ω a†a + (g/2)(a† J_+ + a J_-), on the truncated space.
inline RealMatrix rwa_hamiltonian(const SystemParams& p, FockTruncation t) {
    p.validate();
    const RealMatrix a = hilbert::annihilation(t);
    return -p.delta * hilbert::embed(hilbert::spin_z(), RealMatrix::Identity(t.fock_dim(), t.fock_dim())) +
           p.omega * hilbert::embed(Eigen::Matrix3d::Identity(), hilbert::number(t)) +
           0.5 * p.g *
               (hilbert::embed(hilbert::spin_plus(), RealMatrix(a.transpose())) +
                hilbert::embed(hilbert::spin_minus(), a));
}

/// Diagonalizes every block and scatters its eigenvectors into the full
/// product space (block labels index sectors through sector_of(label.spin)).
inline eigensolver::EigenDecomposition<double> assemble_block_eigensystem(
    const std::vector<HamiltonianBlock>& blocks, FockTruncation t) {
    const auto dim = static_cast<Eigen::Index>(t.dim());
    eigensolver::EigenDecomposition<double> out{Eigen::VectorXd(dim), RealMatrix::Zero(dim, dim)};
    Eigen::Index column = 0;
    for (const auto& block : blocks) {
        if (block.size() == 0) continue;
        const auto local = eigensolver::eigh(block.matrix);
        for (Eigen::Index k = 0; k < local.size(); ++k, ++column) {
            if (column >= dim) throw ArgumentError("assemble_block_eigensystem: blocks overfill the basis");
            out.values(column) = local.values(k);
            for (std::size_t i = 0; i < block.size(); ++i) {
                const auto& label = block.labels[i];
                const auto row = static_cast<Eigen::Index>(t.index(label.spin, static_cast<std::size_t>(label.photons)));
                out.vectors(row, column) = local.vectors(static_cast<Eigen::Index>(i), k);
            }
        }
    }
    if (column != dim) throw ArgumentError("assemble_block_eigensystem: blocks do not cover the basis");
    return eigensolver::sorted(std::move(out));
}

inline Eigen::VectorXd lowest_block_energies(const std::vector<HamiltonianBlock>& blocks, std::size_t levels) {
    std::vector<double> all;
    for (const auto& b : blocks) {
        if (b.size() == 0) continue;
        const Eigen::VectorXd v = eigensolver::eigvalsh(b.matrix);
        all.insert(all.end(), v.data(), v.data() + v.size());
    }
    std::sort(all.begin(), all.end());
    if (all.size() < levels) throw ArgumentError("not enough block eigenvalues for the requested levels");
    return Eigen::Map<const Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(levels));
}

/// RWA eigenbasis with states rotated back to the lab frame.
inline eigensolver::EigenDecomposition<double> rwa_eigensystem(const SystemParams& p, FockTruncation t) {
    auto rotated = assemble_block_eigensystem(rwa_blocks(p, t), t);
    rotated.vectors = frame_rotation(t).transpose() * rotated.vectors;
    return rotated;
}

inline SpectrumResult rwa_spectrum(const SystemParams& p, FockTruncation t, std::size_t levels,
                                   bool with_states = false) {
    check_levels(levels, t);
    SpectrumResult result{Method::rwa, p, t, {}, std::nullopt};
    if (with_states) {
        const auto d = rwa_eigensystem(p, t);
        result.energies = d.values.head(static_cast<Eigen::Index>(levels));
        result.states = RealMatrix(d.vectors.leftCols(static_cast<Eigen::Index>(levels)));
    } else {
        result.energies = lowest_block_energies(rwa_blocks(p, t), levels);
    }
    return result;
}

} // namespace models
} // namespace tcgrwa
