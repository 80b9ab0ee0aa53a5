#pragma once
// Independent quadrature oracles shared by the unit tests and the acceptance binary.

#include <cmath>
#include <random>

#include "conifold/config.hpp"
#include "conifold/specfn.hpp"

namespace oracle {

using conifold::cplx;
using conifold::I;
using conifold::pi;
using conifold::twoPi;
namespace sf = conifold::specfn;

// integral over [0, inf), split at 1
inline cplx halfLine(const sf::CFun& f, double tol = 1e-13) {
    return sf::integrateGK(f, 0.0, 1.0, tol, tol).value + sf::integrateGKToInf(f, 1.0, tol, tol).value;
}

// integral over R + i eps of g(x), split at -1, 1
inline cplx shiftedLine(const std::function<cplx(cplx)>& g, double eps, double tol = 1e-12) {
    auto f = [&](double s) { return g(cplx(s, eps)); };
    auto fm = [&](double s) { return g(cplx(-s, eps)); };
    return sf::integrateGK(f, -1.0, 1.0, tol, tol).value + sf::integrateGKToInf(f, 1.0, tol, tol).value +
           sf::integrateGKToInf(fm, 1.0, tol, tol).value;
}

// Binet: mu(z) = -(1/pi) int_0^inf du/(1+u^2) log(1 - e^{-2 pi z u}), Re z > 0
inline cplx binetIntegral(cplx z) {
    return -halfLine([&](double u) { return std::log(1.0 - std::exp(-twoPi * z * u)) / (1.0 + u * u); }) / pi;
}

// The ray integral -(lambda/pi i) int_{i R_- (t+n)} dl/(l^2 - lambda^2) log(1 - e^{2 pi i (t+n)/l}),
// with l = -i(t+n)/u: -(1/pi) int_0^inf du w/(u^2 + w^2) log(1 - e^{-2 pi u}), w = (t+n)/lambda.
inline cplx muRayIntegral(int n, cplx t, cplx lambda) {
    const cplx w = (t + double(n)) / lambda;
    return -halfLine([&](double u) { return w / (u * u + w * w) * std::log(-std::expm1(-twoPi * u)); }) / pi;
}

// log H(z | w1, w2) = int_{R + i eps} e^{zx} / ((e^{w1 x} - 1)(e^{w2 x} - 1)) dx/x,
// for Re w1, Re w2 > 0 and 0 < Re z < Re(w1 + w2).
inline cplx logHIntegral(cplx z, cplx w1, cplx w2, double eps = 0.5) {
    return shiftedLine(
        [&](cplx x) {
            if (x.real() > 0.0)  // overflow-free form
                return std::exp((z - w1 - w2) * x) / ((1.0 - std::exp(-w1 * x)) * (1.0 - std::exp(-w2 * x))) / x;
            return std::exp(z * x) / ((std::exp(w1 * x) - 1.0) * (std::exp(w2 * x) - 1.0)) / x;
        },
        eps);
}

// log G3(z | w1, w2) = -int_{R + i eps} e^{ux} / ((e^{w1 x} - 1)^2 (e^{w2 x} - 1)) dx/x, u = z + w1
inline cplx logG3Integral(cplx z, cplx w1, cplx w2, double eps = 0.5) {
    const cplx u = z + w1;
    return -shiftedLine(
        [&](cplx x) {
            if (x.real() > 0.0) {
                const cplx a = 1.0 - std::exp(-w1 * x);
                return std::exp((u - 2.0 * w1 - w2) * x) / (a * a * (1.0 - std::exp(-w2 * x))) / x;
            }
            const cplx a = std::exp(w1 * x) - 1.0;
            return std::exp(u * x) / (a * a * (std::exp(w2 * x) - 1.0)) / x;
        },
        eps);
}

// rotation c with Re(c w1), Re(c w2) > 0; H, sin_r and the B_rr are invariant under it
inline cplx rotateIntoRightHalf(cplx w1, cplx w2) {
    const cplx mid = w1 / std::abs(w1) + w2 / std::abs(w2);
    return std::conj(mid) / std::abs(mid);
}

// sin_2(z | w1, w2) = exp((pi i/2) B22) H, H from the integral
inline cplx sin2Integral(cplx z, cplx w1, cplx w2) {
    const cplx c = rotateIntoRightHalf(w1, w2);
    return std::exp(0.5 * pi * I * sf::genBernoulliPoly(2, 2, z, {w1, w2}) + logHIntegral(c * z, c * w1, c * w2));
}

// sin_3(u | w1, w1, w2) = G3(u - w1) exp(-(pi i/6) B33(u | w1, w1, w2)), G3 from the integral
inline cplx sin3Integral(cplx u, cplx w1, cplx w2) {
    const cplx c = rotateIntoRightHalf(w1, w2);
    return std::exp(logG3Integral(c * (u - w1), c * w1, c * w2) -
                    pi * I / 6.0 * sf::genBernoulliPoly(3, 3, u, {w1, w1, w2}));
}

inline double relErr(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
};

}  // namespace oracle
