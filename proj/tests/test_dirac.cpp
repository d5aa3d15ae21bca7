#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "compton/dirac.hpp"
#include "compton/errors.hpp"

using namespace compton;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

double vec_diff(const Vec2& a, const Vec2& b) { return norm(a - b); }
} // namespace

TEST_CASE("Clifford algebra of the gamma matrices") {
    const double eta[4] = {1.0, -1.0, -1.0, -1.0};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4 anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            Mat4 want;
            if (mu == nu) want = 2.0 * eta[mu] * identity4();
            CHECK(frobenius_norm(anti - want) < 1e-14);
        }
}

TEST_CASE("Pauli algebra and hermiticity") {
    for (int i = 1; i <= 3; ++i) {
        CHECK(frobenius_norm(pauli(i) * pauli(i) - identity2()) < 1e-15);
        CHECK(frobenius_norm(dagger(pauli(i)) - pauli(i)) < 1e-15);
    }
    // sigma_1 sigma_2 = i sigma_3 and cyclic.
    CHECK(frobenius_norm(pauli(1) * pauli(2) - I * pauli(3)) < 1e-15);
    CHECK(frobenius_norm(pauli(2) * pauli(3) - I * pauli(1)) < 1e-15);
    CHECK(frobenius_norm(pauli(3) * pauli(1) - I * pauli(2)) < 1e-15);
}

TEST_CASE("slash squares to the Minkowski norm") {
    const FourVector a{1.3, 0.2, -0.7, 0.4};
    const Mat4 s = slash(CFourVector(a));
    CHECK(frobenius_norm(s * s - minkowski_norm2(a) * identity4()) < 1e-13);
}

TEST_CASE("tilted spinors are the advertised eigenvectors") {
    const Mat2 d_minus = (1.0 / kSqrt2) * (pauli(1) - pauli(3)); // x-z diagonal
    const Mat2 d_plus = (1.0 / kSqrt2) * (pauli(1) + pauli(3));

    const auto eigencheck = [](const Mat2& op, const Vec2& s, double lambda) {
        return norm(op * s - lambda * s);
    };
    CHECK(eigencheck(d_minus, tilted_spinor(SpinLabel::se), +1.0) < 1e-14);
    CHECK(eigencheck(d_minus, tilted_spinor(SpinLabel::nw), -1.0) < 1e-14);
    CHECK(eigencheck(d_plus, tilted_spinor(SpinLabel::ne), +1.0) < 1e-14);
    CHECK(eigencheck(d_plus, tilted_spinor(SpinLabel::sw), -1.0) < 1e-14);
    CHECK(eigencheck(pauli(2), tilted_spinor(SpinLabel::into_plane), +1.0) < 1e-14);
    CHECK(eigencheck(pauli(2), tilted_spinor(SpinLabel::out_of_plane), -1.0) < 1e-14);
}

TEST_CASE("tilted spinor superposition relations") {
    const Vec2 se = tilted_spinor(SpinLabel::se);
    const Vec2 nw = tilted_spinor(SpinLabel::nw);
    CHECK(vec_diff(tilted_spinor(SpinLabel::sw), (1.0 / kSqrt2) * (se + nw)) < 1e-15);
    CHECK(vec_diff(tilted_spinor(SpinLabel::ne), (1.0 / kSqrt2) * (se - nw)) < 1e-15);
    // Closed forms of the diagonal pair.
    CHECK(vec_diff(tilted_spinor(SpinLabel::sw),
                   Vec2{std::sin(kPi / 8), -std::cos(kPi / 8)}) < 1e-15);
    CHECK(vec_diff(tilted_spinor(SpinLabel::ne),
                   Vec2{-std::cos(kPi / 8), -std::sin(kPi / 8)}) < 1e-15);
}

TEST_CASE("spin directions of the tilted states") {
    const auto close = [](const std::array<double, 3>& a, double x, double y,
                          double z) {
        return std::abs(a[0] - x) + std::abs(a[1] - y) + std::abs(a[2] - z) <
               1e-12;
    };
    const double c = 1.0 / kSqrt2;
    CHECK(close(pauli_expectation(tilted_spinor(SpinLabel::se)), c, 0, -c));
    CHECK(close(pauli_expectation(tilted_spinor(SpinLabel::nw)), -c, 0, c));
    CHECK(close(pauli_expectation(tilted_spinor(SpinLabel::sw)), -c, 0, -c));
    CHECK(close(pauli_expectation(tilted_spinor(SpinLabel::ne)), c, 0, c));
    CHECK(close(pauli_expectation(tilted_spinor(SpinLabel::into_plane)), 0, 1, 0));
    CHECK(close(pauli_expectation(tilted_spinor(SpinLabel::out_of_plane)), 0, -1, 0));
}

TEST_CASE("tilted pairs are orthonormal and the frame is unitary") {
    const Vec2 se = tilted_spinor(SpinLabel::se);
    const Vec2 nw = tilted_spinor(SpinLabel::nw);
    CHECK(std::abs(norm(se) - 1) < 1e-15);
    CHECK(std::abs(norm(nw) - 1) < 1e-15);
    CHECK(std::abs(dot(se, nw)) < 1e-15);
    const Mat2 u = tilted_frame();
    CHECK(frobenius_norm(dagger(u) * u - identity2()) < 1e-14);
    // Columns are (se, nw).
    CHECK(std::abs(u(0, 0) - se.u) + std::abs(u(1, 0) - se.d) < 1e-15);
    CHECK(std::abs(u(0, 1) - nw.u) + std::abs(u(1, 1) - nw.d) < 1e-15);
}

TEST_CASE("bloch spinor direction matches its expectation") {
    const double th = 1.1, ph = -0.6;
    const auto dir = bloch_direction(th, ph);
    const auto exp = pauli_expectation(bloch_spinor(th, ph));
    for (int i = 0; i < 3; ++i) CHECK(exp[i] == doctest::Approx(dir[i]).epsilon(1e-12));
}

TEST_CASE("free Dirac equation and normalization") {
    const FourVector moms[] = {
        {std::sqrt(1.0004), -0.02, 0.0, 0.0},
        {std::sqrt(2.0004), -0.02, 0.0, 1.0},
        {std::sqrt(1.0 + 0.09 + 0.04 + 0.25), 0.3, -0.2, 0.5},
    };
    const Vec2 spins[] = {Vec2{1.0, 0.0}, tilted_spinor(SpinLabel::se),
                          bloch_spinor(0.7, 2.1)};
    for (const auto& p : moms)
        for (const auto& s : spins) {
            const Vec4 u = dirac_spinor(p, s);
            const Vec4 res = (slash(CFourVector(p)) - identity4()) * u;
            CHECK(norm(res) < 1e-12);
            CHECK(norm2(u) == doctest::Approx(p.t).epsilon(1e-12));      // u+ u = E/m
            CHECK(std::abs(sandwich(u, identity4(), u) - 1.0) < 1e-12);  // ubar u = 1
        }
}

TEST_CASE("spinor construction rejects bad input") {
    CHECK_THROWS_AS(dirac_spinor({1.0, 0.5, 0.0, 0.0}, Vec2{1.0, 0.0}),
                    precondition_error); // off shell
    CHECK_THROWS_AS(dirac_spinor({std::sqrt(1.25), 0.5, 0.0, 0.0}, Vec2{1.0, 1.0}),
                    precondition_error); // unnormalized spinor
    CHECK_THROWS_AS(pauli_expectation(Vec2{2.0, 0.0}), precondition_error);
}
