#include "conifold/twistor.hpp"

#include <cmath>
#include <vector>

#include "conifold/bps.hpp"
#include "conifold/specfn.hpp"

namespace conifold::twistor {

cplx logXSemiflat(const FiberPoint& p, cplx zeta, double R) {
    const cplx Z = bps::zBetaVee(p.t);
    return pi * R * Z / zeta + I * p.thetaBetaVee + pi * R * zeta * std::conj(Z);
}

cplx rayIntegral(cplx Z, double theta, cplx zeta, const TwistorOptions& o) {
    const double az = std::abs(Z);
    if (az == 0.0) throw SingularityError("rayIntegral: Z = 0");
    const cplx dir = -Z / az;
    if (std::abs(std::arg(zeta / dir)) < defaults().rayAngleTol) throw OnRayError("rayIntegral: zeta on the BPS ray");
    const double R = o.hk.R, h = o.quadStep;
    const int K = int(std::lround(o.sMax / h));
    auto g = [&](cplx s) { return specfn::log1pc(-std::exp(-twoPi * R * az * std::cosh(s) + I * theta)); };
    // zeta = dir e^{s0}; the kernel (zeta' + zeta)/(zeta' - zeta) is coth((s - s0)/2)
    const cplx s0 = std::log(zeta / dir);
    const double alpha = s0.imag();
    if (std::abs(alpha) >= pi / 2.0 || std::abs(s0.real()) > o.sMax - 2.0) {
        cplx sum = 0.0;
        for (int k = -K; k <= K; ++k) {
            const double s = k * h;
            const double w = (k == -K || k == K) ? 0.5 : 1.0;
            sum += w * (1.0 / std::tanh(0.5 * (s - s0))) * g(s);
        }
        return sum * h;
    }
    // Near the ray the pole at s0 is closer than the grid can resolve. Subtract
    // 2 g(s0) csch(s - s0), same residue, and integrate it exactly over R:
    // the infinite trapezoid of the smooth remainder is spectrally accurate.
    const cplx g0 = g(s0);
    cplx sum = 0.0;
    for (int k = -K; k <= K; ++k) {
        const double s = k * h;
        sum += (1.0 / std::tanh(0.5 * (s - s0))) * g(s) - 2.0 * g0 / std::sinh(s - s0);
    }
    // grid points beyond sMax, where g vanishes: sum of -2 g0 csch(kh -+ s0)
    cplx tail = 0.0;
    for (int j = 0; j < 6; ++j) {
        const double q = 2 * j + 1;
        const cplx a = std::exp(-q * (K + 1) * h) / (1.0 - std::exp(-q * h));
        tail += 2.0 * a * (std::exp(q * s0) - std::exp(-q * s0));
    }
    sum -= 2.0 * g0 * tail;
    const double side = alpha > 0.0 ? 1.0 : -1.0;
    return sum * h + twoPi * I * side * g0;
}

cplx logXBetaVee(const FiberPoint& p, cplx zeta, const TwistorOptions& o) {
    const int N = o.hk.budget.nMax > 0 ? o.hk.budget.nMax : hk::autoNMax(p.t, o.hk.R);
    // charges sg (beta - n delta), ordered n = 0, 1, -1, 2, ...; sg = +1, -1
    std::vector<std::pair<int, int>> charges;
    for (int a = 0; a <= N; ++a)
        for (int n : {a, -a}) {
            for (int sg : {1, -1}) charges.push_back({n, sg});
            if (a == 0) break;
        }
    const long nc = long(charges.size());
    std::vector<cplx> terms(nc);
    auto one = [&](long i) {
        const auto [n, sg] = charges[i];
        const cplx Z = double(sg) * (p.t - double(n));
        const double th = sg * (p.thetaBeta - n * p.thetaDelta);
        terms[i] = double(sg) * rayIntegral(Z, th, zeta, o);
    };
    if (o.exec == Exec::Serial) {
        for (long i = 0; i < nc; ++i) one(i);
    } else {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < nc; ++i) one(i);
    }
    cplx acc = 0.0;
    for (const cplx& v : terms) acc += v;  // fixed order
    return logXSemiflat(p, zeta, o.hk.R) - acc / (4.0 * pi * I);
}

TwoForm varpiAt(const FiberPoint& p, cplx zeta, const TwistorOptions& o) {
    const double h = o.diffStep, R = o.hk.R;
    Eigen::Vector4cd g;
    for (int i = 0; i < 4; ++i) {
        FiberPoint up = p, dn = p;
        switch (i) {
            case 0: up.t += h; dn.t -= h; break;
            case 1: up.t += I * h; dn.t -= I * h; break;
            case 2: up.thetaBetaVee += h; dn.thetaBetaVee -= h; break;
            default: up.thetaBeta += h; dn.thetaBeta -= h; break;
        }
        g(i) = (logXBetaVee(up, zeta, o) - logXBetaVee(dn, zeta, o)) / (2.0 * h);
    }
    // gradient of log X_beta = pi R t / zeta + i theta_b + pi R zeta tbar
    Eigen::Vector4cd gb;
    gb << pi * R / zeta + pi * R * zeta, I * pi * R / zeta - I * pi * R * zeta, 0.0, I;
    Eigen::Matrix4cd A = (g * gb.transpose() - gb * g.transpose()) / (4.0 * pi * pi);
    // dx = (dt + dtbar)/2, dy = (dt - dtbar)/(2i)
    Eigen::Matrix4cd T = Eigen::Matrix4cd::Zero();
    T(0, 0) = T(0, 1) = 0.5;
    T(1, 0) = -0.5 * I;
    T(1, 1) = 0.5 * I;
    T(2, 2) = T(3, 3) = 1.0;
    return T.transpose() * A * T;
}

TwoForm omega3FromTwistor(const FiberPoint& p, const TwistorOptions& o) {
    TwoForm acc = TwoForm::Zero();
    for (int k = 0; k < o.samples; ++k) {
        const cplx zeta = std::polar(1.0, twoPi * (k + 0.37) / o.samples);
        acc += varpiAt(p, zeta, o);
    }
    return acc / double(o.samples);
}

}  // namespace conifold::twistor
