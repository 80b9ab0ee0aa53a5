#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::specfn {

cplx log1pc(cplx w) {
    cplx u = 1.0 + w;
    if (u == 1.0) return w;
    // Kahan's trick: the rounding of 1 + w cancels in log(u) / (u - 1)
    return std::log(u) * (w / (u - 1.0));
}

namespace {

cplx directSeries(int s, cplx z) {
    cplx term = z, sum = 0.0;
    for (int k = 1; k < 400; ++k) {
        cplx add = term / std::pow(double(k), s);
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) return sum;
        term *= z;
    }
    throw BudgetError("polylog: direct series did not converge");
}

// Li_s(e^u) = sum_{k != s-1} zeta(s-k) u^k/k! + u^{s-1}/(s-1)! (H_{s-1} - log(-u)),
// valid for |u| < 2 pi.  logMinusU is passed in so boundary sides can be chosen.
cplx logSeries(int s, cplx u, cplx logMinusU) {
    cplx sum = 0.0, pw = 1.0;
    double fact = 1.0;
    double harmonic = 0.0;
    for (int j = 1; j < s; ++j) harmonic += 1.0 / j;
    for (int k = 0; k <= 58 + s; ++k) {
        if (k > 0) {
            pw *= u;
            fact *= k;
        }
        cplx add;
        if (k == s - 1) {
            add = pw / fact * (harmonic - logMinusU);
        } else {
            double zk = zetaInt(s - k);
            if (zk == 0.0) continue;
            add = zk * pw / fact;
        }
        sum += add;
        if (k > s + 2 && std::abs(add) < 1e-18 * std::max(1.0, std::abs(sum))) return sum;
    }
    return sum;
}

bool onCut(cplx z) { return z.imag() == 0.0 && z.real() > 1.0; }

cplx polylog(int s, cplx z, CutSide side) {
    if (z == cplx(1.0, 0.0)) return zetaInt(s);
    const bool cut = onCut(z);
    if (cut && side == CutSide::None)
        throw BranchCutError("polylog: argument on [1, inf) without side flag");
    // for a boundary value the sign of i*pi below selects the side
    const double sgn = (side == CutSide::Below) ? -1.0 : 1.0;

    double r = std::abs(z);
    if (r <= 0.5) return directSeries(s, z);
    if (r <= 2.0) {
        cplx u;
        cplx logMinusU;
        if (cut) {
            u = std::log(z.real());
            logMinusU = cplx(std::log(u.real()), -sgn * pi);
        } else {
            u = std::log(z);
            logMinusU = std::log(-u);
        }
        return logSeries(s, u, logMinusU);
    }
    // inversion through 1/z (|1/z| < 1/2)
    cplx lmz = cut ? cplx(std::log(z.real()), -sgn * pi) : std::log(-z);
    cplx inv = directSeries(s, 1.0 / z);
    if (s == 2) return -pi * pi / 6.0 - 0.5 * lmz * lmz - inv;
    if (s == 3) return inv - pi * pi / 6.0 * lmz - lmz * lmz * lmz / 6.0;
    throw DomainError("polylog: order not supported");
}

}  // namespace

cplx li2(cplx z, CutSide side) { return polylog(2, z, side); }
cplx li3(cplx z, CutSide side) { return polylog(3, z, side); }

cplx liNonPositive(int s, cplx z) {
    cplx w = 1.0 - z;
    switch (s) {
        case 1:
            return -log1pc(-z);
        case 0:
            return z / w;
        case -1:
            return z / (w * w);
        case -2:
            return z * (1.0 + z) / (w * w * w);
        case -3:
            return z * (1.0 + 4.0 * z + z * z) / (w * w * w * w);
        default:
            throw DomainError("liNonPositive: order not supported");
    }
}

}  // namespace conifold::specfn
