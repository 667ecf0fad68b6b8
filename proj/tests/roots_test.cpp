#include <cmath>

#include <gtest/gtest.h>

#include <logradius/roots.hpp>

TEST(InvertMonotone, CubeRoot) {
    auto f = [](double x) { return x * x * x; };
    auto df = [](double x) { return 3 * x * x; };
    for (double target : {-8.0, -0.001, 0.0, 2.0, 27.0}) {
        const double x = logradius::invert_monotone(f, df, target, -10.0, 10.0, 1e-14);
        EXPECT_NEAR(x, std::cbrt(target), 1e-12);
    }
}

TEST(InvertMonotone, FlatDerivativeFallsBackToBisection) {
    // Derivative reported as zero everywhere: pure bisection must still converge.
    auto f = [](double x) { return x + 0.5 * std::sin(2 * x); };
    auto df = [](double) { return 0.0; };
    const double x = logradius::invert_monotone(f, df, 1.0, 0.0, 3.0, 1e-13);
    EXPECT_NEAR(f(x), 1.0, 1e-12);
}

TEST(InvertMonotone, UnbracketedTargetThrows) {
    auto f = [](double x) { return x; };
    auto df = [](double) { return 1.0; };
    EXPECT_THROW(logradius::invert_monotone(f, df, 5.0, 0.0, 1.0, 1e-12), logradius::InputError);
}
