#include <cmath>
#include <limits>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "tcgrwa/specfun.hpp"

using namespace tcgrwa;
using specfun::laguerre;

namespace {

// The explicit series
//   L_n^{m-n}(x) = Σ_{i=0}^{min(m,n)} (-1)^{n-i} m! x^{n-i} / ((m-i)! (n-i)! i!)
// with m = n + k, evaluated in the requested floating type.
template <typename Real>
Real laguerre_series(int n, int k, double xd) {
    using std::pow;
    const int m = n + k;
    const Real x = xd;
    Real sum = 0;
    for (int i = 0; i <= n; ++i) {
        // m! / ((m-i)! (n-i)! i!) = C(m, i) / (n-i)!
        Real coeff = 1;
        for (int j = 0; j < i; ++j) coeff = coeff * Real(m - j) / Real(j + 1);
        for (int j = 2; j <= n - i; ++j) coeff /= Real(j);
        Real term = coeff * pow(x, n - i);
        sum += ((n - i) % 2 == 0) ? term : Real(-term);
    }
    return sum;
}

using Big = boost::multiprecision::cpp_bin_float_100;

SystemParams with_ratio(double r) { return SystemParams{1.0, 1.0, r}; }

} // namespace

TEST(Laguerre, DegreeZeroIsOne) { EXPECT_EQ(laguerre(0, 0, 3.7), 1.0); }

TEST(Laguerre, ValueAtOriginIsBinomial) { EXPECT_DOUBLE_EQ(laguerre(2, 1, 0.0), 3.0); }

TEST(Laguerre, SecondDegreeAgainstSeries) {
    const double oracle = static_cast<double>(laguerre_series<long double>(2, 0, 1.0));
    EXPECT_DOUBLE_EQ(oracle, -0.5);
    EXPECT_NEAR(laguerre(2, 0, 1.0), oracle, 1e-15);
}

TEST(Laguerre, RejectsInvalidArguments) {
    EXPECT_THROW(laguerre(-1, 0, 1.0), ArgumentError);
    EXPECT_THROW(laguerre(1, -2, 1.0), ArgumentError);
    EXPECT_THROW(laguerre(1, 0, -0.5), ArgumentError);
    EXPECT_THROW(laguerre(1, 0, std::numeric_limits<double>::quiet_NaN()), ArgumentError);
    EXPECT_THROW(laguerre(1, 0, std::numeric_limits<double>::infinity()), ArgumentError);
}

TEST(Laguerre, MatchesExplicitSeriesForLowDegree) {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= 4; ++k)
            for (double x = 0.0; x <= 25.0; x += 0.37) {
                const double series = static_cast<double>(laguerre_series<Big>(n, k, x));
                EXPECT_LE(std::abs(laguerre(n, k, x) - series), 1e-10 * std::max(1.0, std::abs(series)))
                    << "n=" << n << " k=" << k << " x=" << x;
            }
}

TEST(Laguerre, HighDegreeRelativeAccuracy) {
    for (int n : {25, 60, 100, 150, 200})
        for (int k : {0, 1, 2})
            for (double x : {0.01, 0.25, 1.0, 2.5, 7.3, 12.0, 18.0, 25.0}) {
                const double exact = static_cast<double>(laguerre_series<Big>(n, k, x));
                EXPECT_LE(std::abs(laguerre(n, k, x) - exact), 1e-12 * std::abs(exact))
                    << "n=" << n << " k=" << k << " x=" << x;
            }
}

TEST(Laguerre, ThreeTermRecurrenceHolds) {
    std::mt19937 rng(20240117);
    std::uniform_int_distribution<int> degree(1, 199), order(0, 3);
    std::uniform_real_distribution<double> arg(0.0, 25.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = degree(rng), k = order(rng);
        const double x = arg(rng);
        const double lhs = (n + 1) * laguerre(n + 1, k, x);
        const double a = (2 * n + k + 1 - x) * laguerre(n, k, x);
        const double b = (n + k) * laguerre(n - 1, k, x);
        const double scale = std::max({std::abs(lhs), std::abs(a), std::abs(b), 1e-300});
        EXPECT_LE(std::abs(lhs - (a - b)), 1e-10 * scale) << "n=" << n << " k=" << k << " x=" << x;
    }
}

TEST(G0, UnityWithoutCoupling) {
    for (int n : {0, 1, 7, 40}) EXPECT_DOUBLE_EQ(specfun::g0(n, with_ratio(0.0)), 1.0);
}

TEST(G0, GroundElementIsBeta) {
    EXPECT_NEAR(specfun::g0(0, with_ratio(1.0)), std::exp(-0.5), 1e-15);
    EXPECT_DOUBLE_EQ(specfun::g0(0, with_ratio(0.7)), specfun::beta(with_ratio(0.7)));
}

TEST(G0, ExactZeroCrossing) { EXPECT_NEAR(specfun::g0(1, with_ratio(1.0)), 0.0, 1e-16); }

TEST(G0, DependsOnlyOnCouplingRatio) {
    EXPECT_NEAR(specfun::g0(3, SystemParams{0.4, 2.0, 1.2}), specfun::g0(3, SystemParams{0.9, 1.0, 0.6}), 1e-15);
}

TEST(G0, BoundedByOne) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> degree(0, 200);
    std::uniform_real_distribution<double> ratio(0.0, 3.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double value = specfun::g0(degree(rng), with_ratio(ratio(rng)));
        EXPECT_LE(std::abs(value), 1.0 + 1e-14);
    }
}

TEST(F1Element, VanishesWithoutCoupling) { EXPECT_EQ(specfun::f1_element(0, with_ratio(0.0)), 0.0); }

TEST(F1Element, GroundElementClosedForm) {
    // L_0^1 = 1, so the element is (g/ω) e^{-g²/2ω²}.
    EXPECT_NEAR(specfun::f1_element(0, with_ratio(0.3)), 0.3 * std::exp(-0.045), 1e-15);
    EXPECT_NEAR(specfun::f1_element(0, with_ratio(0.3)), 0.286799244549930, 1e-13);
}
