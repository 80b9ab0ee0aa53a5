#include "conifold/bps.hpp"

#include <algorithm>
#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::bps {

int pairing(Charge a, Charge b) { return a.nBetaVee * b.nBeta - a.nBeta * b.nBetaVee; }

int omega(Charge g) {
    if (g.nBetaVee != 0) return 0;
    if (g.nBeta == 1 || g.nBeta == -1) return 1;
    if (g.nBeta == 0 && g.nDelta != 0) return -2;
    return 0;
}

std::vector<ChargeWeight> supportSpectrum(int nCut, bool includeFlavor) {
    std::vector<ChargeWeight> out;
    for (int a = 0; a <= nCut; ++a) {
        for (int n : {a, -a}) {
            if (a == 0 && n != 0) continue;
            for (int s : {1, -1}) out.push_back({{0, s, n}, 1});
            if (includeFlavor && n != 0) out.push_back({{0, 0, n}, -2});
            if (a == 0) break;
        }
    }
    return out;
}

bool inStrip(cplx t) { return std::abs(t.real()) < 0.5; }

bool inM(cplx t, double wallTol) {
    if (t == 0.0 || !inStrip(t)) return false;
    cplx q = std::exp(twoPi * I * t);
    return std::abs(2.0 * q.real() - 1.0) >= wallTol;
}

bool inM0(cplx t, double wallTol) {
    if (!inM(t, wallTol)) return false;
    return !(t.real() == 0.0 && t.imag() <= 0.0);
}

cplx zBetaVee(cplx t) {
    cplx q = std::exp(twoPi * I * t);
    if (q.imag() == 0.0 && q.real() >= 1.0) throw DomainError("Z_beta_vee: t on i R_{<=0}");
    // -(1/(2 pi i)^2)((2 pi i t)^2/2 + Li2(q)) = -t^2/2 + Li2(q)/(4 pi^2)
    return -0.5 * t * t + specfn::li2(q) / (4.0 * pi * pi);
}

cplx centralCharge(const ModuliPoint& p, Charge g) {
    if (!inM(p.t)) throw DomainError("centralCharge: t outside M");
    cplx z = double(g.nBeta) * p.t + double(g.nDelta);
    if (g.nBetaVee != 0) z += double(g.nBetaVee) * (zBetaVee(p.t) + double(p.sheet) * p.t);
    return z;
}

cplx rescaledCentralCharge(const ModuliPoint& p, Charge g) { return 2.0 * I * centralCharge(p, g); }

ConvergenceReport convergenceCheck(const ModuliPoint& p, double R, int nCut) {
    if (!inM(p.t)) throw DomainError("convergenceCheck: t outside M");
    double partial = 0.0, flavor = 0.0;
    for (const auto& cw : supportSpectrum(nCut)) {
        double term = std::abs(double(cw.omega)) * std::exp(-R * std::abs(centralCharge(p, cw.gamma)));
        partial += term;
        if (cw.gamma.nBeta == 0) flavor += term;
    }
    const double geo = std::exp(-R * (nCut + 1)) / (1.0 - std::exp(-R));
    const double tail = 4.0 * std::exp(R * std::abs(p.t)) * geo + 4.0 * geo;
    return {partial, tail, flavor};
}

double supportRatio(const ModuliPoint& p, int nCut) {
    double best = INFINITY;
    for (const auto& cw : supportSpectrum(nCut)) {
        const Charge& g = cw.gamma;
        double norm = std::sqrt(double(g.nBetaVee * g.nBetaVee + g.nBeta * g.nBeta + g.nDelta * g.nDelta));
        best = std::min(best, std::abs(centralCharge(p, g)) / norm);
    }
    return best;
}

double normalizeAngle(double a) {
    a = std::fmod(a, twoPi);
    if (a < 0) a += twoPi;
    return a;
}

double rayAngle(cplx t, int n, int orientation) {
    double a = std::arg(t + double(n)) + 0.5 * pi;
    if (orientation < 0) a += pi;
    return normalizeAngle(a);
}

bool sameRay(const BpsRay& a, const BpsRay& b) {
    return a.infinite == b.infinite && a.orientation == b.orientation && (a.infinite || a.n == b.n);
}

std::vector<BpsRay> enumerateRays(cplx t, int nLo, int nHi) {
    if (t.imag() == 0.0) throw DomainError("enumerateRays: Im t must be nonzero");
    std::vector<BpsRay> rays;
    for (int n = nLo; n <= nHi; ++n)
        for (int o : {1, -1}) rays.push_back({false, n, o, rayAngle(t, n, o)});
    rays.push_back({true, 0, 1, 0.5 * pi});
    rays.push_back({true, 0, -1, 1.5 * pi});
    std::sort(rays.begin(), rays.end(), [](const BpsRay& a, const BpsRay& b) { return a.angle < b.angle; });
    return rays;
}

namespace {

double angularDistance(double a, double b) {
    double d = std::abs(normalizeAngle(a - b));
    return std::min(d, twoPi - d);
}

// signed anticlockwise offset of b from a, in (-pi, pi]
double ccwOffset(double from, double to) {
    double d = normalizeAngle(to - from);
    return d > pi ? d - twoPi : d;
}

}  // namespace

SectorId classifySector(cplx t, cplx lambda, int nLo, int nHi, double angTol) {
    if (t.imag() == 0.0) throw DomainError("classifySector: Im t must be nonzero");
    if (lambda == 0.0) throw DomainError("classifySector: lambda = 0");
    const double phi = normalizeAngle(std::arg(lambda));
    if (angularDistance(phi, 0.5 * pi) < angTol || angularDistance(phi, 1.5 * pi) < angTol)
        throw OnRayError("classifySector: lambda on i R");

    SectorId id;
    bool found = false;
    for (int o : {1, -1}) {
        // rays of this family sit where arg(t + x) = beta for real x
        double beta = phi - 0.5 * pi - (o < 0 ? pi : 0.0);
        beta = std::remainder(beta, twoPi);
        if (std::sin(beta) * t.imag() <= 0.0) continue;
        const double x = t.imag() * std::cos(beta) / std::sin(beta) - t.real();
        const long base = long(std::floor(x));
        if (std::abs(double(base)) > 1e15) throw OnRayError("classifySector: lambda too close to i R");
        BpsRay r0{false, int(base), o, rayAngle(t, int(base), o)};
        BpsRay r1{false, int(base + 1), o, rayAngle(t, int(base + 1), o)};
        for (const auto& r : {r0, r1})
            if (angularDistance(phi, r.angle) < angTol) throw OnRayError("classifySector: lambda on a BPS ray");
        if (ccwOffset(phi, r0.angle) > 0) {
            id.ccw = r0;
            id.cw = r1;
        } else {
            id.ccw = r1;
            id.cw = r0;
        }
        found = true;
        break;
    }
    if (!found) throw OnRayError("classifySector: no bounding rays");

    id.nLo = nLo;
    for (int n = nLo; n <= nHi; ++n) {
        double a = ((t + double(n)) / lambda).real();
        id.signs.push_back(a > 0 ? 1 : (a < 0 ? -1 : 0));
    }
    double b = (1.0 / lambda).real();
    id.bSign = b > 0 ? 1 : (b < 0 ? -1 : 0);
    return id;
}

}  // namespace conifold::bps
