// hilbert.hpp - operators and states on spin-1 ⊗ truncated Fock space

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "tcgrwa/errors.hpp"
#include "tcgrwa/params.hpp"

namespace tcgrwa {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using cplx = std::complex<double>;

/// Complex amplitudes over the product basis |j_z, n>, spin-major with sector
/// order (+1, 0, -1) and ascending Fock index inside each sector.
class QuantumState {
public:
    explicit QuantumState(FockTruncation truncation)
        : truncation_(truncation), amplitudes_(ComplexVector::Zero(truncation.dim())) {}

    QuantumState(FockTruncation truncation, ComplexVector amplitudes)
        : truncation_(truncation), amplitudes_(std::move(amplitudes)) {
        if (static_cast<std::size_t>(amplitudes_.size()) != truncation_.dim())
            throw ArgumentError("QuantumState: amplitude vector does not match 3(N+1)");
    }

    /// |j_z> ⊗ |fock>, where fock lives on a single sector.
    static QuantumState product(int jz, const Eigen::Ref<const ComplexVector>& fock,
                                FockTruncation truncation) {
        if (static_cast<std::size_t>(fock.size()) != truncation.fock_dim())
            throw ArgumentError("QuantumState::product: Fock vector does not match N+1");
        QuantumState state(truncation);
        state.sector(jz) = fock;
        return state;
    }

    const FockTruncation& truncation() const { return truncation_; }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    ComplexVector& amplitudes() { return amplitudes_; }

    Eigen::VectorBlock<ComplexVector> sector(int jz) {
        check_spin(jz);
        return amplitudes_.segment(sector_of(jz) * truncation_.fock_dim(), truncation_.fock_dim());
    }
    Eigen::VectorBlock<const ComplexVector> sector(int jz) const {
        check_spin(jz);
        return amplitudes_.segment(sector_of(jz) * truncation_.fock_dim(), truncation_.fock_dim());
    }

    cplx amplitude(int jz, std::size_t n) const { return amplitudes_(truncation_.index(jz, n)); }

    double norm() const { return amplitudes_.norm(); }

    QuantumState& normalize() {
        const double nrm = norm();
        if (nrm == 0.0) throw NumericalError("QuantumState: cannot normalize the zero vector");
        amplitudes_ /= nrm;
        return *this;
    }

    cplx inner(const QuantumState& other) const {
        if (!(truncation_ == other.truncation_)) throw ArgumentError("QuantumState: truncation mismatch");
        return amplitudes_.dot(other.amplitudes_);
    }

private:
    FockTruncation truncation_;
    ComplexVector amplitudes_;
};

namespace hilbert {

/// a with <n-1|a|n> = sqrt(n).
inline RealMatrix annihilation(FockTruncation t) {
    RealMatrix a = RealMatrix::Zero(t.fock_dim(), t.fock_dim());
    for (std::size_t n = 1; n <= t.n_max(); ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline RealMatrix creation(FockTruncation t) { return annihilation(t).transpose(); }

inline RealMatrix number(FockTruncation t) {
    RealVector diag(t.fock_dim());
    for (std::size_t n = 0; n <= t.n_max(); ++n) diag(n) = static_cast<double>(n);
    return diag.asDiagonal();
}

struct SpinOperators {
    ComplexMatrix jx, jy, jz, jplus, jminus;
};

// Real spin-1 matrices in the (+1, 0, -1) ordering. J_y is the only complex one.
inline Eigen::Matrix3d spin_plus() {
    Eigen::Matrix3d jp = Eigen::Matrix3d::Zero();
    jp(0, 1) = std::sqrt(2.0);
    jp(1, 2) = std::sqrt(2.0);
    return jp;
}
inline Eigen::Matrix3d spin_minus() { return spin_plus().transpose(); }
inline Eigen::Matrix3d spin_x() { return 0.5 * (spin_plus() + spin_minus()); }
inline Eigen::Matrix3d spin_z() { return Eigen::Vector3d(1.0, 0.0, -1.0).asDiagonal(); }

inline SpinOperators spin1_operators() {
    const ComplexMatrix jp = spin_plus().cast<cplx>();
    const ComplexMatrix jm = spin_minus().cast<cplx>();
    const cplx two_i(0.0, 2.0);
    return SpinOperators{0.5 * (jp + jm), (jp - jm) / two_i, spin_z().cast<cplx>(), jp, jm};
}

/// exp[λ(a† - a)] on the truncated space. The generator is real antisymmetric,
/// so the result is exactly orthogonal; only elements near level N carry
/// truncation error.
inline RealMatrix displacement(double lambda, FockTruncation t) {
    if (!std::isfinite(lambda) || std::abs(lambda) > 5.0)
        throw ArgumentError("displacement: |lambda| must be at most 5");
    if (lambda == 0.0) return RealMatrix::Identity(t.fock_dim(), t.fock_dim());
    const RealMatrix a = annihilation(t);
    const RealMatrix generator = lambda * (a.transpose() - a);
    return generator.exp();
}

/// Tensor product spin_op ⊗ fock_op in the spin-major ordering.
template <typename SpinDerived, typename FockDerived>
auto embed(const Eigen::MatrixBase<SpinDerived>& spin_op, const Eigen::MatrixBase<FockDerived>& fock_op) {
    using Scalar = typename Eigen::ScalarBinaryOpTraits<typename SpinDerived::Scalar,
                                                        typename FockDerived::Scalar>::ReturnType;
    using Result = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (spin_op.rows() != 3 || spin_op.cols() != 3)
        throw ArgumentError("embed: spin operator must be 3x3");
    if (fock_op.rows() != fock_op.cols()) throw ArgumentError("embed: Fock operator must be square");
    const Result spin = spin_op.template cast<Scalar>();
    const Result fock = fock_op.template cast<Scalar>();
    return Result(Eigen::kroneckerProduct(spin, fock));
}

/// The polaron frame U = exp[(g/ω) J_z (a† - a)]: sector j_z carries the
/// displacement D(j_z g/ω). Eigenstates of the transformed Hamiltonian map
/// back to the lab frame through U†, i.e. D(-j_z g/ω) on sector j_z.
class PolaronTransform {
public:
    PolaronTransform(const SystemParams& p, FockTruncation t)
        : truncation_(t),
          up_(displacement(p.coupling_ratio(), t)),
          down_(displacement(-p.coupling_ratio(), t)),
          identity_(RealMatrix::Identity(t.fock_dim(), t.fock_dim())) {}

    const FockTruncation& truncation() const { return truncation_; }

    /// D(j_z g/ω), the block of U acting on sector j_z.
    const RealMatrix& sector_block(int jz) const {
        check_spin(jz);
        if (jz == 0) return identity_;
        return jz > 0 ? up_ : down_;
    }

    RealMatrix matrix() const {
        const auto d = static_cast<Eigen::Index>(truncation_.fock_dim());
        RealMatrix u = RealMatrix::Zero(3 * d, 3 * d);
        for (int jz : kSpinProjections) {
            const auto s = static_cast<Eigen::Index>(sector_of(jz));
            u.block(s * d, s * d, d, d) = sector_block(jz);
        }
        return u;
    }

    /// U† applied column-wise to a full-space matrix (or vector).
    template <typename Derived>
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Derived::ColsAtCompileTime>
    apply_inverse(const Eigen::MatrixBase<Derived>& x) const {
        const auto d = static_cast<Eigen::Index>(truncation_.fock_dim());
        if (x.rows() != 3 * d) throw ArgumentError("PolaronTransform: dimension mismatch");
        Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Derived::ColsAtCompileTime> out(x.rows(), x.cols());
        for (int jz : kSpinProjections) {
            const auto s = static_cast<Eigen::Index>(sector_of(jz));
            if (jz == 0)
                out.middleRows(s * d, d) = x.middleRows(s * d, d);
            else
                out.middleRows(s * d, d) =
                    sector_block(jz).transpose().template cast<typename Derived::Scalar>() * x.middleRows(s * d, d);
        }
        return out;
    }

private:
    FockTruncation truncation_;
    RealMatrix up_;   // D(+g/ω)
    RealMatrix down_; // D(-g/ω)
    RealMatrix identity_;
};

inline RealMatrix polaron_transform(const SystemParams& p, FockTruncation t) {
    return PolaronTransform(p, t).matrix();
}

/// Coherent state amplitudes e^{-α²/2} αⁿ/sqrt(n!), renormalized on |0>..|N>.
inline RealVector coherent_state(double alpha, FockTruncation t) {
    if (!std::isfinite(alpha)) throw ArgumentError("coherent_state: alpha must be finite");
    if (alpha * alpha > static_cast<double>(t.n_max()) / 4.0)
        throw ArgumentError("coherent_state: alpha^2 exceeds N/4, truncation would dominate");
    RealVector c(t.fock_dim());
    c(0) = std::exp(-0.5 * alpha * alpha);
    for (std::size_t n = 1; n <= t.n_max(); ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    return c / c.norm();
}

} // namespace hilbert
} // namespace tcgrwa
