#include "conifold/ask.hpp"

#include <climits>
#include <cmath>
#include <vector>

#include "conifold/bps.hpp"
#include "conifold/specfn.hpp"

namespace conifold::ask {

namespace {

const cplx kTwoPiI = twoPi * I;

void requireOffCut(cplx q) {
    if (q.imag() == 0.0 && q.real() >= 1.0) throw DomainError("periods: q on [1, inf)");
}

void requireWallFree(cplx t, double tol) {
    cplx q = std::exp(kTwoPiI * t);
    if (std::abs(2.0 * q.real() - 1.0) < tol) throw WallError("Im tau = 0 on the wall 2 Re q = 1");
}

}  // namespace

PeriodVector periodsContinued(cplx t) {
    const cplx q = std::exp(kTwoPiI * t);
    requireOffCut(q);
    const cplx L = kTwoPiI * t;
    const cplx l2 = specfn::li2(q), l3 = specfn::li3(q);
    const cplx c2 = 1.0 / (kTwoPiI * kTwoPiI), c3 = c2 / kTwoPiI;
    return {1.0, t, c2 * (0.5 * L * L + l2), c3 * (-L * L * L / 6.0 - L * l2 + 2.0 * l3)};
}

PeriodVector periods(cplx t) {
    if (!bps::inM0(t)) throw DomainError("periods: t outside M0");
    return periodsContinued(t);
}

cplx prepotentialF0(cplx t) {
    if (!bps::inM0(t)) throw DomainError("prepotentialF0: t outside M0");
    const cplx q = std::exp(kTwoPiI * t);
    const cplx L = kTwoPiI * t;
    return (L * L * L / 6.0 + specfn::li3(q)) / (kTwoPiI * kTwoPiI * kTwoPiI);
}

cplx tau(cplx t) {
    if (!bps::inStrip(t)) throw DomainError("tau: t outside the strip");
    requireWallFree(t, defaults().wallTol);
    const cplx q = std::exp(kTwoPiI * t);
    return (specfn::log1pc(-q) - kTwoPiI * t) / kTwoPiI;
}

double imTau(cplx t) {
    if (!bps::inStrip(t)) throw DomainError("imTau: t outside the strip");
    requireWallFree(t, defaults().wallTol);
    const cplx q = std::exp(kTwoPiI * t);
    return -std::log(std::abs((1.0 - q) / q)) / twoPi;
}

const char* regionName(Region r) {
    switch (r) {
        case Region::MPlus: return "M+";
        case Region::MMinus: return "M-";
        case Region::Wall: return "wall";
        default: return "outside";
    }
}

Region regionClassify(cplx t, double wallTol) {
    const double x = t.real(), y = t.imag();
    if (std::abs(x) >= 0.5) return Region::OutsideStrip;
    // 2 Re q - 1 = 2 e^{-2 pi y} cos(2 pi x) - 1
    if (std::abs(2.0 * std::exp(-twoPi * y) * std::cos(twoPi * x) - 1.0) < wallTol) return Region::Wall;
    // M+ is the region under the curve y = log(2 cos 2 pi x) / 2 pi, |x| < 1/4
    if (std::abs(x) < 0.25 && y < std::log(2.0 * std::cos(twoPi * x)) / twoPi) return Region::MPlus;
    return Region::MMinus;
}

Matrix4 monodromyMatrixZ0() {
    return {{{1.0, 0.0, 0.0, 0.0},
             {1.0, 1.0, 0.0, 0.0},
             {0.5, 1.0, 1.0, 0.0},
             {-1.0 / 6.0, -0.5, -1.0, 1.0}}};
}

// ---- theta-calculus --------------------------------------------------------

namespace {

constexpr int kNoLi = INT_MIN;

// coeff * z^k * L^p * Li_s(z), L = log z; s == kNoLi means no polylog factor
struct Term {
    cplx coeff;
    int k;
    int p;
    int s;
};
using Expr = std::vector<Term>;

Expr theta(const Expr& e) {
    Expr out;
    for (const Term& m : e) {
        if (m.k != 0) out.push_back({m.coeff * double(m.k), m.k, m.p, m.s});
        if (m.p != 0) out.push_back({m.coeff * double(m.p), m.k, m.p - 1, m.s});
        if (m.s != kNoLi) out.push_back({m.coeff, m.k, m.p, m.s - 1});
    }
    return out;
}

Expr oneMinusZ(const Expr& e) {
    Expr out;
    for (const Term& m : e) {
        out.push_back(m);
        out.push_back({-m.coeff, m.k + 1, m.p, m.s});
    }
    return out;
}

cplx evaluate(const Expr& e, cplx z, cplx L) {
    cplx sum = 0.0, comp = 0.0;
    for (const Term& m : e) {
        cplx v = m.coeff * std::pow(z, m.k) * std::pow(L, m.p);
        if (m.s != kNoLi) {
            if (m.s == 3) v *= specfn::li3(z);
            else if (m.s == 2) v *= specfn::li2(z);
            else v *= specfn::liNonPositive(m.s, z);
        }
        // Kahan-compensated accumulation
        cplx y = v - comp;
        cplx tsum = sum + y;
        comp = (tsum - sum) - y;
        sum = tsum;
    }
    return sum;
}

}  // namespace

double pfResidual(cplx t) {
    if (!bps::inM0(t)) throw DomainError("pfResidual: t outside M0");
    const cplx z = std::exp(kTwoPiI * t);
    const cplx L = kTwoPiI * t;
    const cplx c1 = 1.0 / kTwoPiI, c2 = c1 * c1, c3 = c2 * c1;
    const std::array<Expr, 4> w = {
        Expr{{1.0, 0, 0, kNoLi}},
        Expr{{c1, 0, 1, kNoLi}},
        Expr{{0.5 * c2, 0, 2, kNoLi}, {c2, 0, 0, 2}},
        Expr{{-c3 / 6.0, 0, 3, kNoLi}, {-c3, 0, 1, 2}, {2.0 * c3, 0, 0, 3}},
    };
    double worst = 0.0;
    for (const Expr& e : w) {
        Expr r = theta(theta(oneMinusZ(theta(theta(e)))));
        worst = std::max(worst, std::abs(evaluate(r, z, L)));
    }
    return worst;
}

double askMetricCoefficient(cplx t) { return imTau(t); }

}  // namespace conifold::ask
