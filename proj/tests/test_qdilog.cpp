#include <cmath>

#include "conifold/qdilog.hpp"
#include "conifold/specfn.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conifold;
using namespace conifold::qdilog;

TEST_CASE("double sine at the self-dual point") {
    const cplx w1 = 1.0, w2 = I;
    const cplx v = multipleSine(2, 0.5 * (w1 + w2), {w1, w2});
    CHECK(std::abs(v - 1.0) < 1e-12);
    CHECK(oracle::relErr(v, oracle::sin2Integral(0.5 * (w1 + w2), w1, w2)) < 1e-9);
}

TEST_CASE("double sine: symmetry, rescaling, quadrature") {
    const cplx w1(1.0, 0.3), w2(0.4, 1.0), z(0.6, 0.2), c(2.0, 1.0);
    const cplx v = multipleSine(2, z, {w1, w2});
    CHECK(oracle::relErr(multipleSine(2, z, {w2, w1}), v) < 1e-12);
    CHECK(oracle::relErr(multipleSine(2, c * z, {c * w1, c * w2}), v) < 1e-12);
    CHECK(oracle::relErr(v, oracle::sin2Integral(z, w1, w2)) < 1e-9);
}

TEST_CASE("triple sine against its quadrature") {
    const cplx w1 = cplx(0.9, 0.7) / twoPi, w2 = 1.0, u = cplx(0.3, 0.5) + w1;
    CHECK(oracle::relErr(multipleSine(3, u, {w1, w1, w2}), oracle::sin3Integral(u, w1, w2)) < 1e-9);
}

TEST_CASE("H agrees with its integral representation") {
    const cplx w1(1.0, 0.3), w2(0.4, 1.0);
    for (cplx z : {cplx(0.6, 0.2), cplx(0.2, -0.3), cplx(1.1, 0.5)})
        CHECK(std::abs(logQuantumDilogH(z, {w1, w2}) - oracle::logHIntegral(z, w1, w2)) < 1e-10);
}

TEST_CASE("H symmetry, rescaling and shift") {
    const cplx w1(1.0, 0.2), w2(-0.3, 0.8), t(0.4, 0.3), c(0.7, -1.2);
    const cplx h = quantumDilogH(t, {w1, w2});
    CHECK(oracle::relErr(quantumDilogH(t, {w2, w1}), h) < 1e-10);
    CHECK(oracle::relErr(quantumDilogH(c * t, {c * w1, c * w2}), h) < 1e-10);
    // H(t + w1) = H(t) / (1 - e^{2 pi i t / w2})
    CHECK(oracle::relErr(quantumDilogH(t + w1, {w1, w2}), h / (1.0 - std::exp(twoPi * I * t / w2))) < 1e-10);
}

TEST_CASE("H at a lattice point") {
    CHECK_THROWS_AS(quantumDilogH(0.0, {1.0, cplx(0.2, 1.0)}), PoleError);
    CHECK_THROWS_AS(quantumDilogH(0.3, {1.0, 2.0}), DomainError);
}

TEST_CASE("Q correction term by term") {
    const cplx t(0.3, 0.5), w1 = 1.0, w2 = -cplx(0.0, 0.7);
    const cplx x = std::exp(twoPi * I * t / w1);
    const cplx expect = -w1 / (twoPi * I * w2) * specfn::li2(x) - 0.5 * std::log(1.0 - x) + pi * I / 12.0 * w2 / w1;
    CHECK(std::abs(qCorrection(t, w1, w2) - expect) < 1e-14);
    CHECK(qCorrection(t, w1, w2) == qCorrection(t, w1, w2));
    // far up the t-plane only the constant survives
    CHECK(std::abs(qCorrection(cplx(0.1, 30.0), w1, w2) - pi * I / 12.0 * w2 / w1) < 1e-12);
    CHECK(std::abs(qCorrection(cplx(0.1, 30.0), w1, w2, QConstant::AsPrinted) - pi / 12.0 * w2 / w1) < 1e-12);
    CHECK_THROWS_AS(qCorrection(cplx(0.0, -0.2), w1, w2), BranchCutError);
}

TEST_CASE("difference equation for the non-perturbative free energy") {
    oracle::Rng rng(11);
    for (int i = 0; i < 5; ++i) {
        // inside the strip of the residue series: Im t > 0 and 0 < arg(t - 1) - arg(lambda) < pi
        const cplx lambda = std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.25, 1.3));
        const cplx t(rng.uniform(-0.3, 0.3), rng.uniform(0.3, 0.9));
        const cplx lc = lambda / twoPi;
        const double res = std::abs(fNonPert(lambda, t + lc) - fNonPert(lambda, t) + logQuantumDilogH(t, {lc, 1.0}));
        CHECK(res < 1e-8);
    }
}

TEST_CASE("G3 literal shift property and rescaling") {
    const cplx lambda(0.9, 0.7), lc = lambda / twoPi, t(0.3, 0.5);
    // with the literal definition the shift lands on H(t + lc | lc, 1)
    const cplx d = logTripleG3(t + lc, lc, 1.0) - logTripleG3(t, lc, 1.0);
    CHECK(std::abs(std::exp(d) * quantumDilogH(t + lc, {lc, 1.0}) - 1.0) < 1e-8);
    const cplx c(1.5, 0.4);
    CHECK(oracle::relErr(tripleG3(c * t, c * lc, c), tripleG3(t, lc, 1.0)) < 1e-9);
    CHECK(oracle::relErr(tripleG3(t, lc, 1.0), std::exp(oracle::logG3Integral(t, lc, 1.0))) < 1e-9);
    CHECK_THROWS_AS(tripleG3(-lc, lc, 1.0), PoleError);
}

TEST_CASE("path-continued free energy") {
    const cplx lambda(0.9, 0.7);
    std::vector<cplx> path;
    for (int k = 0; k <= 40; ++k) path.push_back(cplx(-0.3 + 0.015 * k, 0.6));
    std::vector<cplx> f = fNonPertPath(lambda, path);
    for (std::size_t k = 1; k < f.size(); ++k) CHECK(std::abs(f[k] - f[k - 1]) < 0.5);
    CHECK(std::abs(std::exp(f.back()) - std::exp(fNonPert(lambda, path.back()))) <
          1e-12 * std::abs(std::exp(f.back())));
}
