#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "tcgrwa/models.hpp"

using namespace tcgrwa;

namespace {

// Sorted lowest `count` values of ωn - g² j²/ω: the Δ = 0 displaced oscillators.
std::vector<double> displaced_levels(double g, std::size_t count) {
    std::vector<double> all;
    for (int n = 0; n < 200; ++n)
        for (int j : {-1, 0, 1}) all.push_back(n - g * g * j * j);
    std::sort(all.begin(), all.end());
    all.resize(count);
    return all;
}

} // namespace

TEST(FullHamiltonian, IsSymmetric) {
    const RealMatrix h = models::build_full_hamiltonian(SystemParams{0.8, 1.0, 0.9}, FockTruncation(30));
    EXPECT_EQ((h - h.transpose()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(FullHamiltonian, DecoupledLimit) {
    const FockTruncation t(25);
    const Eigen::VectorXd e = eigensolver::eigvalsh(models::build_full_hamiltonian(SystemParams{1.0, 1.0, 0.0}, t));
    std::vector<double> expected;
    for (int n = 0; n <= 25; ++n)
        for (int m : {-1, 0, 1}) expected.push_back(n + m);
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(e(static_cast<Eigen::Index>(k)), expected[k], 1e-12);
}

TEST(FullHamiltonian, ZeroDeltaDisplacedOscillators) {
    for (double g : {0.5, 1.0}) {
        const Eigen::VectorXd e =
            eigensolver::eigvalsh(models::build_full_hamiltonian(SystemParams{0.0, 1.0, g}, FockTruncation(60)));
        const auto expected = displaced_levels(g, 30);
        for (std::size_t k = 0; k < expected.size(); ++k)
            EXPECT_NEAR(e(static_cast<Eigen::Index>(k)), expected[k], 1e-8) << "g=" << g << " k=" << k;
    }
}

TEST(FullHamiltonian, RotatedFrameIsSimilar) {
    const FockTruncation t(40);
    for (const SystemParams p : {SystemParams{0.5, 1.0, 0.7}, SystemParams{1.0, 1.0, 1.0}}) {
        const RealMatrix w = models::frame_rotation(t);
        const RealMatrix h1 = models::build_full_hamiltonian(p, t);
        const RealMatrix h2 = models::build_rotated_hamiltonian(p, t);
        EXPECT_LT((w * h1 * w.transpose() - h2).cwiseAbs().maxCoeff(), 1e-13);
        const Eigen::VectorXd e1 = eigensolver::eigvalsh(h1), e2 = eigensolver::eigvalsh(h2);
        EXPECT_LT((e1 - e2).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(FrameRotation, MapsSpinOperators) {
    const Eigen::Matrix3d w = models::frame_rotation();
    EXPECT_LT((w * w.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((w * hilbert::spin_x() * w.transpose() + hilbert::spin_z()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((w * hilbert::spin_z() * w.transpose() - hilbert::spin_x()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ExactSpectrum, DecoupledLowestLevels) {
    const auto s = models::exact_spectrum(SystemParams{1.0, 1.0, 0.0}, FockTruncation(60), 3);
    EXPECT_NEAR(s.energies(0), -1.0, 1e-12);
    EXPECT_NEAR(s.energies(1), 0.0, 1e-12);
    EXPECT_NEAR(s.energies(2), 0.0, 1e-12);
    EXPECT_EQ(s.method, Method::exact);
}

TEST(ExactSpectrum, ZeroDeltaGround) {
    const auto s = models::exact_spectrum(SystemParams{0.0, 1.0, 1.0}, FockTruncation(60), 1);
    EXPECT_NEAR(s.energies(0), -1.0, 1e-10);
}

// Regression anchor, computed once with N = 60 and certified against N = 120.
TEST(ExactSpectrum, ResonantGroundAnchor) {
    const auto s = models::exact_spectrum(SystemParams{1.0, 1.0, 0.5}, FockTruncation(60), 1);
    EXPECT_NEAR(s.energies(0), -1.0689707147730012, 1e-11);
}

TEST(ExactSpectrum, StatesAreEigenvectors) {
    const SystemParams p{0.5, 1.0, 0.6};
    const FockTruncation t(40);
    const auto s = models::exact_spectrum(p, t, 5, true);
    ASSERT_TRUE(s.states.has_value());
    const RealMatrix h = models::build_full_hamiltonian(p, t);
    for (Eigen::Index k = 0; k < 5; ++k)
        EXPECT_LT((h * s.states->col(k) - s.energies(k) * s.states->col(k)).norm(), 1e-10);
}

TEST(ExactSpectrum, CertificationFailureNamesLevel) {
    try {
        models::exact_spectrum(SystemParams{1.0, 1.0, 1.0}, FockTruncation(4), 3);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("level 0"), std::string::npos) << e.what();
    }
}

TEST(ExactSpectrum, RejectsTooManyLevels) {
    EXPECT_THROW(models::exact_spectrum(SystemParams{}, FockTruncation(10), 12), ArgumentError);
    EXPECT_THROW(models::exact_spectrum(SystemParams{}, FockTruncation(10), 0), ArgumentError);
}

TEST(ExactSpectrum, VariationalInTruncation) {
    const SystemParams p{1.0, 1.0, 1.0};
    Eigen::VectorXd previous;
    for (std::size_t n : {8, 16, 32, 64, 128}) {
        const Eigen::VectorXd e =
            eigensolver::eigvalsh(models::build_full_hamiltonian(p, FockTruncation(n))).head(6);
        if (previous.size() > 0) {
            for (Eigen::Index k = 0; k < 6; ++k) EXPECT_LE(e(k), previous(k) + 1e-12) << "N=" << n << " k=" << k;
        }
        previous = e;
    }
}

TEST(RwaBlock, ResonantStructure) {
    const auto b = models::rwa_block(1, SystemParams{1.0, 1.0, 0.2});
    // (|-1,0>, |0,1>, |+1,2>): diagonal (ω·0 + Δ, ω, 2ω - Δ)
    EXPECT_DOUBLE_EQ(b.matrix(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(b.matrix(1, 1), 1.0);
    EXPECT_DOUBLE_EQ(b.matrix(2, 2), 1.0);
    EXPECT_NEAR(b.matrix(0, 1), std::sqrt(0.5) * 0.2, 1e-16);
    EXPECT_NEAR(b.matrix(1, 2), std::sqrt(0.5) * 0.2 * std::sqrt(2.0), 1e-16);
    EXPECT_EQ(b.matrix(0, 2), 0.0);
    EXPECT_EQ(b.labels[0], (BasisLabel{-1, 0}));
    EXPECT_EQ(b.labels[2], (BasisLabel{+1, 2}));
    EXPECT_NO_THROW(b.validate());
}

TEST(RwaBlock, TraceIsThreeOmegaN) {
    for (int n : {1, 4, 17}) {
        const auto b = models::rwa_block(n, SystemParams{0.37, 1.3, 0.9});
        EXPECT_NEAR(b.matrix.trace(), 3 * 1.3 * n, 1e-12);
    }
}

TEST(RwaBlock, DiagonalWithoutCoupling) {
    const auto b = models::rwa_block(3, SystemParams{0.5, 1.0, 0.0});
    EXPECT_TRUE(b.matrix.isDiagonal(0.0));
    EXPECT_THROW(models::rwa_block(0, SystemParams{}), ArgumentError);
}

TEST(RwaBlocks, CoverTheTruncatedBasisOnce) {
    const FockTruncation t(12);
    const auto blocks = models::rwa_blocks(SystemParams{0.5, 1.0, 0.4}, t);
    std::map<std::size_t, int> seen;
    std::size_t total = 0;
    for (const auto& b : blocks) {
        b.validate();
        total += b.size();
        for (const auto& l : b.labels) ++seen[t.index(l.spin, static_cast<std::size_t>(l.photons))];
    }
    EXPECT_EQ(total, t.dim());
    EXPECT_EQ(seen.size(), t.dim());
    for (const auto& [index, count] : seen) EXPECT_EQ(count, 1) << index;
}

TEST(RwaBlocks, MatchOperatorForm) {
    const FockTruncation t(20);
    const SystemParams p{0.8, 1.0, 0.6};
    const auto d = models::assemble_block_eigensystem(models::rwa_blocks(p, t), t);
    const Eigen::VectorXd direct = eigensolver::eigvalsh(models::rwa_hamiltonian(p, t));
    EXPECT_LT((d.values - direct).cwiseAbs().maxCoeff(), 1e-12);
    const RealMatrix h = models::rwa_hamiltonian(p, t);
    EXPECT_LT((h * d.vectors - d.vectors * d.values.asDiagonal()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RwaSpectrum, ExactAtZeroCoupling) {
    for (double delta : {0.5, 1.0}) {
        const SystemParams p{delta, 1.0, 0.0};
        const auto r = models::rwa_spectrum(p, FockTruncation(60), 8);
        const auto e = models::exact_spectrum(p, FockTruncation(60), 8);
        EXPECT_LT((r.energies - e.energies).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(RwaSpectrum, PerturbativeAtSmallCoupling) {
    for (double delta : {0.5, 1.0}) {
        const SystemParams p{delta, 1.0, 0.01};
        const auto r = models::rwa_spectrum(p, FockTruncation(60), 8);
        const auto e = models::exact_spectrum(p, FockTruncation(60), 8);
        EXPECT_LT((r.energies - e.energies).cwiseAbs().maxCoeff(), 1e-3) << "delta=" << delta;
    }
}

TEST(RwaSpectrum, StatesAreLabFrameEigenvectorsOfRotatedRwa) {
    const FockTruncation t(20);
    const SystemParams p{1.0, 1.0, 0.3};
    const auto s = models::rwa_spectrum(p, t, 6, true);
    const RealMatrix w = models::frame_rotation(t);
    const RealMatrix h_lab = w.transpose() * models::rwa_hamiltonian(p, t) * w;
    for (Eigen::Index k = 0; k < 6; ++k)
        EXPECT_LT((h_lab * s.states->col(k) - s.energies(k) * s.states->col(k)).norm(), 1e-12);
}

TEST(HamiltonianBlockTest, TrimDropsTopLabels) {
    const auto b = models::rwa_block(5, SystemParams{0.5, 1.0, 0.3}).trimmed(5);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b.labels[0], (BasisLabel{-1, 4}));
    EXPECT_EQ(b.labels[1], (BasisLabel{0, 5}));
    HamiltonianBlock bad{{{0, 1}, {0, 1}}, RealMatrix::Identity(2, 2)};
    EXPECT_THROW(bad.validate(), ArgumentError);
}
