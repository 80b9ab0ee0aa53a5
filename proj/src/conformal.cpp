#include "conifold/conformal.hpp"

#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::conformal {

using specfn::binetMu;
using specfn::binetMuContinued;

cplx conformalXBeta(cplx t, cplx lambda) {
    if (lambda == 0.0) throw DomainError("conformalXBeta: lambda = 0");
    return std::exp(twoPi * I * t / lambda);
}

cplx conformalXDelta(cplx, cplx lambda) {
    if (lambda == 0.0) throw DomainError("conformalXDelta: lambda = 0");
    return std::exp(twoPi * I / lambda);
}

namespace {

double aCoeff(cplx t, cplx lambda, int n) { return ((t + double(n)) / lambda).real(); }

int signOf(double a, cplx w) {
    if (std::abs(a) <= 1e-14 * std::abs(w)) throw OnRayError("a_n = Re((t+n)/lambda) vanishes");
    return a > 0 ? 1 : -1;
}

cplx termWith(int n, const SectorContext& ctx, const std::optional<TermOverride>& over) {
    const cplx w = (ctx.t + double(n)) / ctx.lambda;
    if (over && over->n == n) return double(over->sign) * binetMuContinued(double(over->sign) * w);
    return ctx.sign(n) > 0 ? binetMu(w) : -binetMu(-w);
}

struct Kahan {
    cplx sum = 0.0, comp = 0.0;
    void add(cplx v) {
        cplx y = v - comp;
        cplx s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
};

}  // namespace

int SectorContext::sign(int n) const {
    if (std::abs(n) <= M) return signs[std::size_t(n + M)];
    return signOf(aCoeff(t, lambda, n), (t + double(n)) / lambda);
}

SectorContext makeContext(cplx t, cplx lambda, const TruncationBudget& b) {
    if (!(t.imag() > 0.0)) throw DomainError("conformal: requires Im t > 0");
    if (lambda == 0.0) throw DomainError("conformal: lambda = 0");
    SectorContext c;
    c.t = t;
    c.lambda = lambda;
    const cplx inv = 1.0 / lambda;
    const double bb = inv.real();
    if (std::abs(bb) <= 1e-15 * std::abs(inv)) throw OnRayError("conformal: lambda on i R");
    c.bSign = bb > 0 ? 1 : -1;
    const double A = (t / lambda).real();
    const double m = std::floor(std::abs(A / bb)) + 5.0;
    if (m > b.maxTerms) throw RegimeError("conformal: sign pattern does not settle within max_terms");
    c.M = int(m);
    c.signs.reserve(std::size_t(2 * c.M + 1));
    for (int n = -c.M; n <= c.M; ++n) c.signs.push_back(signOf(aCoeff(t, lambda, n), (t + double(n)) / lambda));
    bps::SectorId id = bps::classifySector(t, lambda, 0, 0);
    c.cw = id.cw;
    c.ccw = id.ccw;
    return c;
}

cplx muTermSigned(int n, const SectorContext& ctx) { return termWith(n, ctx, std::nullopt); }

SumResult logXInstBetaVee(const SectorContext& ctx, const TruncationBudget& b, std::optional<TermOverride> over) {
    const double lam = std::abs(ctx.lambda);
    double nCut = std::max<double>(ctx.M, std::ceil(25.0 * lam + std::abs(ctx.t)));
    if (over) nCut = std::max<double>(nCut, std::abs(over->n));
    if (nCut > b.maxTerms) throw BudgetError("conformal: explicit block exceeds max_terms");
    const int N = int(nCut);

    Kahan acc;
    acc.add(termWith(0, ctx, over));
    for (int n = 1; n <= N; ++n) acc.add(termWith(n, ctx, over) + termWith(-n, ctx, over));

    // Beyond N every |w| >= 25 and sign * mu(sign * w) has the same odd
    // asymptotic series, so the pair tail is sum_m c_m lambda^{2m-1} T_m.
    const cplx t = ctx.t;
    const cplx up = double(N + 1) + t, dn = double(N + 1) - t;
    cplx tail = 0.0, last = 0.0;
    cplx lpow = ctx.lambda;
    for (int m = 1; m <= 8; ++m) {
        const double c = specfn::bernoulli(2 * m) / ((2.0 * m - 1.0) * (2.0 * m));
        const cplx T = m == 1 ? specfn::digamma(dn) - specfn::digamma(up)
                              : specfn::hurwitzZetaLarge(2 * m - 1, up) - specfn::hurwitzZetaLarge(2 * m - 1, dn);
        last = c * lpow * T;
        tail += last;
        lpow *= ctx.lambda * ctx.lambda;
    }
    acc.add(tail);
    const double bound = std::abs(last) + 1e-16 * std::abs(acc.sum) * std::sqrt(double(N));
    return {acc.sum, bound, N};
}

cplx partialSum(const SectorContext& ctx, int N, Ordering ord) {
    Kahan acc;
    acc.add(muTermSigned(0, ctx));
    for (int n = 1; n <= N; ++n) {
        if (ord == Ordering::Paired) acc.add(muTermSigned(n, ctx) + muTermSigned(-n, ctx));
        else acc.add(muTermSigned(n, ctx));
    }
    return acc.sum;
}

cplx partialSumReversed(const SectorContext& ctx, int N) {
    Kahan acc;
    for (int n = N; n >= 1; --n) acc.add(muTermSigned(n, ctx) + muTermSigned(-n, ctx));
    acc.add(muTermSigned(0, ctx));
    return acc.sum;
}

namespace {

cplx xWith(cplx t, cplx lambda, const TruncationBudget& b, std::optional<TermOverride> over) {
    SectorContext ctx = makeContext(t, lambda, b);
    const cplx Z = bps::zBetaVee(t);
    return std::exp(twoPi * I * Z / lambda + logXInstBetaVee(ctx, b, over).value);
}

}  // namespace

cplx conformalXBetaVee(cplx t, cplx lambda, const TruncationBudget& b) { return xWith(t, lambda, b, std::nullopt); }

cplx conformalXBetaVeeContinued(cplx t, cplx lambda, int n, int sign, const TruncationBudget& b) {
    return xWith(t, lambda, b, TermOverride{n, sign});
}

cplx infiniteProductJump(cplx t, cplx lambda, InfiniteSide which, const TruncationBudget& b) {
    if (lambda == 0.0) throw DomainError("infiniteProductJump: lambda = 0");
    const int s = which == InfiniteSide::PosSector ? 1 : -1;
    // exponents of the two families, both must decrease in real part with n
    auto ePlus = [&](int n) { return -twoPi * I * (t + double(s * n)) / lambda; };
    auto eMinus = [&](int n) { return twoPi * I * (t - double(s * n)) / lambda; };
    if (!((ePlus(2) - ePlus(1)).real() < 0.0) || !((eMinus(2) - eMinus(1)).real() < 0.0))
        throw ConvergenceError("infiniteProductJump: exponents do not decay at this lambda");
    cplx prod = 1.0;
    for (int n = 1;; ++n) {
        if (n > b.maxTerms) throw BudgetError("infiniteProductJump: max_terms reached");
        const cplx a = ePlus(n), c = eMinus(n);
        prod *= (1.0 - std::exp(a)) / (1.0 - std::exp(c));
        if (a.real() < std::log(1e-17) && c.real() < std::log(1e-17)) break;
    }
    return prod;
}

JumpMeasurement measureJump(cplx t, int n, JumpFamily f, double radius, double guard, const TruncationBudget& b) {
    const double theta = bps::rayAngle(t, n, f == JumpFamily::Plus ? 1 : -1);
    const cplx lp = std::polar(radius, theta + guard), lm = std::polar(radius, theta - guard);
    const int sp = signOf(aCoeff(t, lp, n), (t + double(n)) / lp);
    const int sm = signOf(aCoeff(t, lm, n), (t + double(n)) / lm);
    if (sp == sm) throw OrderingError("measureJump: offsets do not straddle the ray");
    // anticlockwise side over the clockwise side continued, at lambda_+
    const cplx measured = conformalXBetaVee(t, lp, b) / conformalXBetaVeeContinued(t, lp, n, sm, b);
    // and the same ratio assembled at lambda_-
    const cplx measuredM = conformalXBetaVeeContinued(t, lm, n, sp, b) / conformalXBetaVee(t, lm, b);
    const cplx predicted = jumpFactor(n, t, lp, f);
    const cplx predictedM = jumpFactor(n, t, lm, f);
    const double e1 = std::abs(measured - predicted) / std::abs(predicted);
    const double e2 = std::abs(measuredM - predictedM) / std::abs(predictedM);
    return {measured, predicted, std::max(e1, e2)};
}

cplx analyticContinuation(double targetAngle, cplx t, cplx lambda, const TruncationBudget& b) {
    const double phi = std::arg(lambda);
    const double d = std::remainder(targetAngle - phi, twoPi);
    if (std::abs(d) >= 0.5 * pi) throw DomainError("analyticContinuation: lambda outside the target half-plane");
    return conformalXBetaVee(t, lambda, b) * bps::arcJumpProduct(t, lambda, phi, phi + d, b);
}

}  // namespace conifold::conformal
