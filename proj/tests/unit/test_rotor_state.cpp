#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "qrotor/errors.hpp"
#include "qrotor/rotor_state.hpp"

using namespace qrotor;
using std::numbers::pi;

namespace {

double max_diff(const RotorState& a, const RotorState& b) {
    double worst = 0.0;
    for (int m = -a.cutoff(); m <= a.cutoff(); ++m) worst = std::max(worst, std::abs(a.amplitude(m) - b.amplitude(m)));
    return worst;
}

}  // namespace

TEST_CASE("momentum states") {
    const auto s0 = make_momentum_state(0, 0);
    CHECK(s0.dim() == 1);
    CHECK(s0.amplitude(0) == Complex(1.0));

    const auto s = make_momentum_state(1, 1);
    CHECK(s.amplitudes()[0] == Complex(0.0));
    CHECK(s.amplitudes()[1] == Complex(0.0));
    CHECK(s.amplitudes()[2] == Complex(1.0));

    CHECK_THROWS_AS(make_momentum_state(1, 2), DomainError);
    CHECK_THROWS_WITH(make_momentum_state(1, -2), doctest::Contains("[-1, 1]"));
    CHECK_THROWS_AS(make_momentum_state(-1, 0), DomainError);
}

TEST_CASE("angle states") {
    const auto a0 = make_angle_state(1, 0);
    for (int m = -1; m <= 1; ++m) CHECK(std::abs(a0.amplitude(m) - 1.0 / std::sqrt(3.0)) < 1e-15);

    const auto a1 = make_angle_state(1, 1);
    for (int m = -1; m <= 1; ++m) {
        const Complex expected = std::exp(Complex(0, -m * 2 * pi / 3)) / std::sqrt(3.0);
        CHECK(std::abs(a1.amplitude(m) - expected) < 1e-15);
    }
    CHECK(make_angle_state(0, 0).amplitude(0) == Complex(1.0));
    CHECK_THROWS_AS(make_angle_state(1, 3), DomainError);
    CHECK_THROWS_AS(make_angle_state(1, -1), DomainError);

    SUBCASE("orthonormal basis") {
        for (int l : {1, 2, 5}) {
            const int d = 2 * l + 1;
            for (int n = 0; n < d; ++n) {
                for (int k = 0; k < d; ++k) {
                    const double expected = n == k ? 1.0 : 0.0;
                    CHECK(std::abs(inner_product(make_angle_state(l, n), make_angle_state(l, k)) - expected) < 1e-13);
                }
            }
        }
    }
}

TEST_CASE("angle eigenvalues") {
    CHECK(angle_eigenvalue(1, 1) == doctest::Approx(2 * pi / 3).epsilon(1e-15));
    CHECK(angle_eigenvalue(1, 0) == 0.0);
    CHECK(angle_eigenvalue(2, 4) == doctest::Approx(8 * pi / 5).epsilon(1e-15));
    CHECK_THROWS_AS(angle_eigenvalue(2, 5), DomainError);
}

TEST_CASE("gaussian packet") {
    const auto g = make_gaussian_packet(1, 0.0, 1.0);
    const double e = std::exp(-0.5);
    const double norm = std::sqrt(2 * e * e + 1.0);
    CHECK(std::abs(g.amplitude(-1) - e / norm) < 1e-15);
    CHECK(std::abs(g.amplitude(0) - 1.0 / norm) < 1e-15);
    CHECK(std::abs(g.amplitude(1) - e / norm) < 1e-15);

    const auto narrow = make_gaussian_packet(5, 0.0, 50.0);
    CHECK(std::abs(narrow.amplitude(0)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(make_gaussian_packet(2, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(make_gaussian_packet(2, 0.0, -1.0), DomainError);

    SUBCASE("peaked at the center angle") {
        const int l = 20;
        const int d = 2 * l + 1;
        const int target = 13;
        const auto packet = make_gaussian_packet(l, angle_eigenvalue(l, target), 0.3);
        const auto rep = to_angle_representation(packet);
        int best = 0;
        for (int n = 0; n < d; ++n)
            if (std::abs(rep.values[n]) > std::abs(rep.values[best])) best = n;
        CHECK(best == target);
    }
}

TEST_CASE("state construction checks") {
    CHECK_THROWS_AS(RotorState(1, {1.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(RotorState(1, {1.0, 0.0}), DimensionMismatch);
    CHECK_THROWS_AS(RotorState(1, {0.0, 0.0, 0.0}, true), DomainError);
    const RotorState s(1, {1.0, 1.0, 0.0}, true);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("periodic amplitude lookup") {
    std::mt19937_64 rng(3);
    const auto s = make_random_state(2, rng);
    for (int m = -2; m <= 2; ++m) {
        CHECK(s.amplitude(m + 5) == s.amplitude(m));
        CHECK(s.amplitude(m - 10) == s.amplitude(m));
    }
}

TEST_CASE("angle representation") {
    const auto rep = to_angle_representation(make_momentum_state(1, 0));
    for (const auto& v : rep.values) CHECK(std::abs(v - 1.0 / std::sqrt(3.0)) < 1e-15);
    REQUIRE(rep.thetas.size() == 3);
    CHECK(rep.thetas[1] == doctest::Approx(2 * pi / 3));

    const auto delta = to_angle_representation(make_angle_state(1, 2));
    CHECK(std::abs(delta.values[2] - 1.0) < 1e-15);
    CHECK(std::abs(delta.values[0]) < 1e-15);
    CHECK(std::abs(delta.values[1]) < 1e-15);

    SUBCASE("matches direct sum and round-trips") {
        std::mt19937_64 rng(11);
        for (int l = 0; l <= 12; ++l) {
            const auto s = make_random_state(l, rng);
            const oracle::Vector v(s.amplitudes().begin(), s.amplitudes().end());
            const auto r = to_angle_representation(s);
            double norm2 = 0.0;
            for (int n = 0; n < s.dim(); ++n) {
                CHECK(std::abs(r.values[n] - oracle::angle_amplitude(v, n)) < 1e-13);
                norm2 += std::norm(r.values[n]);
            }
            CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(max_diff(from_angle_representation(r), s) < 1e-13);
        }
    }
}

TEST_CASE("inner product") {
    CHECK_THROWS_AS(inner_product(make_momentum_state(1, 0), make_momentum_state(2, 0)), DimensionMismatch);
    std::mt19937_64 rng(5);
    const auto a = make_random_state(3, rng);
    const auto b = make_random_state(3, rng);
    CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-15);
    CHECK(std::abs(inner_product(a, a) - 1.0) < 1e-14);
}

TEST_CASE("shift operators") {
    for (int l : {1, 2, 4}) {
        const auto top = momentum_shift(make_momentum_state(l, l));
        CHECK(std::abs(top.amplitude(-l) - 1.0) < 1e-15);
        const auto last = angle_shift(make_angle_state(l, 2 * l));
        CHECK(std::abs(inner_product(make_angle_state(l, 0), last)) == doctest::Approx(1.0).epsilon(1e-14));
        for (int n = 0; n < 2 * l; ++n) {
            CHECK(max_diff(angle_shift(make_angle_state(l, n)), make_angle_state(l, n + 1)) < 1e-14);
        }
    }

    std::mt19937_64 rng(17);
    for (int l = 0; l <= 6; ++l) {
        const int d = 2 * l + 1;
        const auto psi = make_random_state(l, rng);
        auto m = psi;
        auto a = psi;
        for (int i = 0; i < d; ++i) {
            m = momentum_shift(m);
            a = angle_shift(a);
        }
        CHECK(max_diff(m, psi) < 1e-13);
        CHECK(max_diff(a, psi) < 1e-13);

        // Weyl commutation, angle_shift applied first on the left-hand side.
        const auto lhs = momentum_shift(angle_shift(psi));
        const auto rhs = angle_shift(momentum_shift(psi));
        const Complex w = std::exp(Complex(0, 2 * pi / d));
        for (int k = -l; k <= l; ++k) CHECK(std::abs(lhs.amplitude(k) - w * rhs.amplitude(k)) < 1e-14);
    }
}

TEST_CASE("random states are seeded and normalized") {
    std::mt19937_64 a(99);
    std::mt19937_64 b(99);
    const auto x = make_random_state(7, a);
    const auto y = make_random_state(7, b);
    CHECK(max_diff(x, y) == 0.0);
    CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-14));
    for (int m = -7; m <= 7; ++m) CHECK(std::abs(x.amplitude(m)) > 0.0);
}
