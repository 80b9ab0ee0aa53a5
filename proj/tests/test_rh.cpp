#include <cmath>

#include "conifold/bps.hpp"
#include "conifold/conjecture.hpp"
#include "conifold/qdilog.hpp"
#include "conifold/rh.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conifold;

namespace {

const cplx kT(0.3, 0.8);

double rayAngle(cplx t, int n) { return std::arg(t + double(n)) + pi / 2.0; }

}  // namespace

TEST_CASE("base sector is the quantum dilogarithm") {
    const cplx lam = std::polar(0.7, rh::baseSectorMid(kT));
    const cplx expect = qdilog::quantumDilogH(kT, {1.0, -lam}) * std::exp(qdilog::qCorrection(kT, 1.0, -lam));
    CHECK(rh::rhSolutionPhi(kT, lam) == expect);
    CHECK(rh::baseSectorMid(kT) > rayAngle(kT, 0));
    CHECK(rh::baseSectorMid(kT) < rayAngle(kT, -1));
}

TEST_CASE("crossing l_0 multiplies by the jump factor") {
    const double a0 = rayAngle(kT, 0), d = 1e-7;
    const cplx lp = std::polar(0.7, a0 + d), lm = std::polar(0.7, a0 - d);
    const cplx ratio = rh::rhSolutionPhi(kT, lp) / rh::rhSolutionPhi(kT, lm);
    CHECK(oracle::relErr(ratio, 1.0 - std::exp(-twoPi * I * kT / lp)) < 1e-5);
    CHECK_THROWS_AS(rh::rhSolutionPhi(kT, std::polar(0.7, a0)), OnRayError);
    CHECK_THROWS_AS(rh::rhSolutionPhi(kT, 0.7), DomainError);  // R_+ is where the rays accumulate
}

TEST_CASE("Phi -> 1 as lambda -> 0 in a sector") {
    const double mid = rh::baseSectorMid(kT);
    double prev = INFINITY;
    for (int k = 0; k <= 8; ++k) {
        const double dev = std::abs(rh::rhSolutionPhi(kT, std::polar(std::ldexp(0.5, -k), mid)) - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("conjecture residual and the printed Q constant") {
    const double mid = rh::baseSectorMid(kT);
    for (double r : {0.3, 1.0}) {
        const cplx lam = std::polar(r, mid);
        CHECK(conjecture::conjectureResidual(kT, lam) < 1e-6);
        CHECK(conjecture::conjectureResidual(kT, lam, defaults().budget, qdilog::QConstant::AsPrinted) > 1e-2);
    }
    // a sector reached through finitely many jumps
    CHECK(conjecture::conjectureResidual(kT, std::polar(0.5, 200.0 * pi / 180.0)) < 1e-6);
}

TEST_CASE("residual at lambda and -lambda") {
    for (double deg : {60.0, 120.0, 165.0}) {
        const cplx lam = std::polar(0.6, deg * pi / 180.0);
        const double a = conjecture::conjectureResidual(kT, lam), b = conjecture::conjectureResidual(kT, -lam);
        CHECK(a < 1e-6);
        CHECK(b < 1e-6);
        // inversion on the Riemann-Hilbert side alone
        CHECK(std::abs(rh::rhSolutionPhi(kT, lam) * rh::rhSolutionPhi(kT, -lam) - 1.0) < 1e-9);
    }
}
