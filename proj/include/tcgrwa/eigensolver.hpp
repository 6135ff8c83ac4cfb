// eigensolver.hpp - dense Hermitian eigendecomposition and spectral time evolution

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <type_traits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tcgrwa/errors.hpp"
#include "tcgrwa/hilbert.hpp"

namespace tcgrwa::eigensolver {

/// Ascending eigenvalues with orthonormal eigenvectors; column k pairs with values(k).
/// Also used for approximate eigenbases (zeroth order, GRWA, RWA) once they are
/// expressed in the lab frame.
template <typename Scalar = double>
struct EigenDecomposition {
    using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    Eigen::VectorXd values;
    MatrixType vectors;

    Eigen::Index size() const { return values.size(); }
};

namespace detail {

// Makes the largest-magnitude component of every column real and positive.
// Near-ties resolve to the lowest index.
template <typename MatrixType>
void fix_phases(MatrixType& vectors) {
    using std::abs;
    for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
        auto col = vectors.col(k);
        const double largest = col.cwiseAbs().maxCoeff();
        Eigen::Index pivot = 0;
        while (abs(col(pivot)) < largest * (1.0 - 1e-9)) ++pivot;
        const auto value = col(pivot);
        col *= abs(value) / value;
    }
}

} // namespace detail

template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Full decomposition of a Hermitian (real symmetric) matrix, backed by Eigen's
/// tridiagonal QL solver. Throws ContractViolation when the input is not
/// Hermitian to 1e-12 (scaled by the largest entry) and NumericalError when the
/// iteration fails to converge.
template <typename Derived>
EigenDecomposition<typename Derived::Scalar> eigh(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.rows() != m.cols()) throw ArgumentError("eigh: matrix must be square");
    if (m.size() == 0) return {};
    const double scale = std::max(1.0, static_cast<double>(m.cwiseAbs().maxCoeff()));
    const double asym = hermiticity_error(m);
    if (asym > 1e-12 * scale)
        throw ContractViolation("eigh: matrix is not Hermitian (max |M - M^H| = " + std::to_string(asym) + ")");

    Eigen::SelfAdjointEigenSolver<MatrixType> solver(m.derived());
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigh: QL iteration did not converge for a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    EigenDecomposition<Scalar> out{solver.eigenvalues(), solver.eigenvectors()};
    detail::fix_phases(out.vectors);
    return out;
}

/// Eigenvalues only; cheaper when no states are needed.
template <typename Derived>
Eigen::VectorXd eigvalsh(const Eigen::MatrixBase<Derived>& m) {
    using MatrixType = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.rows() != m.cols()) throw ArgumentError("eigvalsh: matrix must be square");
    const double scale = std::max(1.0, static_cast<double>(m.cwiseAbs().maxCoeff()));
    if (hermiticity_error(m) > 1e-12 * scale) throw ContractViolation("eigvalsh: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<MatrixType> solver(m.derived(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("eigvalsh: QL iteration did not converge");
    return solver.eigenvalues();
}

/// Sorts an eigenbasis assembled from independent pieces into ascending order.
template <typename Scalar>
EigenDecomposition<Scalar> sorted(EigenDecomposition<Scalar> d) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(d.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return d.values(a) < d.values(b); });
    EigenDecomposition<Scalar> out{Eigen::VectorXd(d.size()),
                                   typename EigenDecomposition<Scalar>::MatrixType(d.vectors.rows(), d.size())};
    for (Eigen::Index k = 0; k < d.size(); ++k) {
        out.values(k) = d.values(order[static_cast<std::size_t>(k)]);
        out.vectors.col(k) = d.vectors.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

/// Precomputes the expansion c_k = <v_k|ψ0> so that ψ(t) = Σ_k e^{-iλ_k t} c_k v_k
/// can be sampled repeatedly.
template <typename Scalar = double>
class SpectralPropagator {
public:
    SpectralPropagator(const EigenDecomposition<Scalar>& basis, const ComplexVector& psi0) : basis_(&basis) {
        if (basis.vectors.rows() != psi0.size())
            throw ArgumentError("SpectralPropagator: state dimension does not match the eigenbasis");
        coefficients_ = basis.vectors.template cast<cplx>().adjoint() * psi0;
    }

    const ComplexVector& coefficients() const { return coefficients_; }

    /// Σ|c_k|², equal to |ψ0|² when the basis spans the state.
    double captured_weight() const { return coefficients_.squaredNorm(); }

    ComplexVector at(double t) const {
        const ComplexVector phased =
            coefficients_.cwiseProduct((basis_->values * cplx(0.0, -t)).array().exp().matrix());
        if constexpr (std::is_same_v<Scalar, double>) {
            const RealMatrix& v = basis_->vectors;
            ComplexVector out(v.rows());
            out.real() = v * phased.real();
            out.imag() = v * phased.imag();
            return out;
        } else {
            return basis_->vectors * phased;
        }
    }

private:
    const EigenDecomposition<Scalar>* basis_;
    ComplexVector coefficients_;
};

/// ψ(t) = e^{-iHt} ψ0 with H given through its decomposition.
template <typename Scalar>
ComplexVector evolve(const ComplexVector& psi0, const EigenDecomposition<Scalar>& decomp, double t) {
    return SpectralPropagator<Scalar>(decomp, psi0).at(t);
}

inline QuantumState evolve(const QuantumState& psi0, const EigenDecomposition<double>& decomp, double t) {
    return QuantumState(psi0.truncation(), evolve(psi0.amplitudes(), decomp, t));
}

} // namespace tcgrwa::eigensolver
