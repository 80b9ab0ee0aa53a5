#include "acceptance_suite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "conifold/ask.hpp"
#include "conifold/bps.hpp"
#include "conifold/conformal.hpp"
#include "conifold/conjecture.hpp"
#include "conifold/hk.hpp"
#include "conifold/specfn.hpp"
#include "conifold/twistor.hpp"
#include "oracles.hpp"

namespace acceptance {

using namespace conifold;

bool CriterionResult::pass() const {
    return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; });
}

namespace {

// Tolerances, pinned.
constexpr double kBinetTol = 1e-10;
constexpr double kSineTol = 1e-9;
constexpr double kHSymTol = 1e-10;
constexpr double kPfTol = 1e-12;
constexpr double kMonodromyTol = 1e-9;
constexpr double kTauFdTol = 1e-6;
constexpr double kTwoRouteTol = 1e-10;
constexpr double kOvLimitTol = 1e-6;
constexpr double kTwistorTol = 1e-4;
constexpr double kMuTol = 1e-9;
constexpr double kDriftFactor = 10.0;
constexpr double kInversionTol = 1e-9;
constexpr double kJumpTol = 1e-8;
constexpr double kGrowthExponent = 10.0;
constexpr double kConjectureTol = 1e-6;
constexpr double kDiffEqTol = 1e-8;

CaseRecord below(std::string name, double v, double tol) { return {std::move(name), v, "<", tol, v < tol}; }
CaseRecord atMost(std::string name, double v, double tol) { return {std::move(name), v, "<=", tol, v <= tol}; }
CaseRecord above(std::string name, double v, double tol) { return {std::move(name), v, ">", tol, v > tol}; }

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

// admissible strip of the residue series for F_np
void admissiblePoint(oracle::Rng& rng, cplx& lambda, cplx& t) {
    lambda = std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.25, 1.3));
    t = cplx(rng.uniform(-0.3, 0.3), rng.uniform(0.3, 0.9));
}

CriterionResult specialFunctions(const SuiteOptions& o) {
    CriterionResult r{1, "special-function dualities", {}, {}};
    oracle::Rng rng(o.seed + 1);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const cplx z(rng.uniform(0.2, 5.0), rng.uniform(-4.0, 4.0));
        worst = std::max(worst, oracle::relErr(specfn::binetMu(z), oracle::binetIntegral(z)));
    }
    r.cases.push_back(below("binet mu vs integral, 50 points", worst, kBinetTol));

    worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const cplx w1 = std::polar(rng.uniform(0.7, 1.3), rng.uniform(-0.6, 0.3));
        const cplx w2 = std::polar(rng.uniform(0.7, 1.3), rng.uniform(0.9, 1.6));
        const cplx z = rng.uniform(0.2, 0.8) * w1 + rng.uniform(0.2, 0.8) * w2;
        worst = std::max(worst, oracle::relErr(qdilog::multipleSine(2, z, {w1, w2}), oracle::sin2Integral(z, w1, w2)));
    }
    for (int i = 0; i < 5; ++i) {
        const cplx w1 = std::polar(rng.uniform(0.8, 1.4), rng.uniform(0.4, 1.0)) / twoPi;
        const cplx u = cplx(rng.uniform(0.1, 0.5), rng.uniform(0.2, 0.6)) + w1;
        worst = std::max(worst, oracle::relErr(qdilog::multipleSine(3, u, {w1, w1, 1.0}), oracle::sin3Integral(u, w1, 1.0)));
    }
    r.cases.push_back(below("multiple sine vs quadrature, 10 points", worst, kSineTol));

    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const cplx w1 = std::polar(rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5));
        const cplx w2 = std::polar(rng.uniform(0.5, 1.5), rng.uniform(1.2, 2.2));
        const cplx t(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.5));
        const cplx c = std::polar(rng.uniform(0.5, 2.0), rng.uniform(-pi, pi));
        const cplx h = qdilog::quantumDilogH(t, {w1, w2});
        worst = std::max({worst, oracle::relErr(qdilog::quantumDilogH(t, {w2, w1}), h),
                          oracle::relErr(qdilog::quantumDilogH(c * t, {c * w1, c * w2}), h)});
    }
    r.cases.push_back(below("H symmetry and rescaling, 20 points", worst, kHSymTol));
    return r;
}

CriterionResult picardFuchs(const SuiteOptions& o) {
    CriterionResult r{2, "Picard-Fuchs and monodromy", {}, {}};
    oracle::Rng rng(o.seed + 2);
    double worst = 0.0;
    for (int n = 0; n < 50;) {
        const cplx t(rng.uniform(-0.45, 0.45), rng.uniform(-0.3, 0.6));
        if (!bps::inM0(t, 1e-6)) continue;
        worst = std::max(worst, ask::pfResidual(t));
        ++n;
    }
    r.cases.push_back(below("PF residual, 50 points", worst, kPfTol));
    const ask::Matrix4 M = ask::monodromyMatrixZ0();
    worst = 0.0;
    for (int n = 0; n < 5; ++n) {
        const cplx t(rng.uniform(-0.4, 0.4), rng.uniform(-0.3, 0.4));
        ask::PeriodVector a = ask::periodsContinued(t), b = ask::periodsContinued(t + 1.0);
        for (int i = 0; i < 4; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < 4; ++j) s += M[i][j] * a[j];
            worst = std::max(worst, std::abs(b[i] - s));
        }
    }
    r.cases.push_back(below("periods(t+1) = M periods(t), 5 points", worst, kMonodromyTol));
    return r;
}

CriterionResult askConsistency(const SuiteOptions& o) {
    CriterionResult r{3, "ASK consistency", {}, {}};
    oracle::Rng rng(o.seed + 3);
    double worst = 0.0;
    for (int n = 0; n < 20;) {
        const cplx t(rng.uniform(-0.4, 0.4), rng.uniform(0.05, 0.6));
        if (!bps::inM0(t, 1e-3)) continue;
        const double h = 1e-5;
        const cplx d = (bps::zBetaVee(t + h) - bps::zBetaVee(t - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(d - ask::tau(t)));
        ++n;
    }
    r.cases.push_back(below("dZ_bv/dt vs tau, 20 points", worst, kTauFdTol));
    int mismatches = 0, plus = 0;
    for (int n = 0; n < 40;) {
        // half the panel from the box around M+, half from the whole strip
        const cplx t = n < 20 ? cplx(rng.uniform(-0.25, 0.25), rng.uniform(0.002, 0.11))
                              : cplx(rng.uniform(-0.45, 0.45), rng.uniform(0.002, 0.3));
        const ask::Region reg = ask::regionClassify(t, 1e-9);
        if (reg != ask::Region::MPlus && reg != ask::Region::MMinus) continue;
        const bool positive = ask::imTau(t) > 0.0;
        plus += reg == ask::Region::MPlus;
        mismatches += positive != (reg == ask::Region::MPlus);
        ++n;
    }
    r.cases.push_back(atMost("sign of Im tau vs region, 40 points (mismatches)", mismatches, 0));
    r.notes.push_back("M+ points in the sign panel: " + std::to_string(plus) + " of 40");
    return r;
}

CriterionResult metricStructure(const SuiteOptions& o) {
    CriterionResult r{4, "metric structure", {}, {}};
    oracle::Rng rng(o.seed + 4);
    std::vector<hk::FiberPoint> pts;
    while (pts.size() < 30) {
        const cplx t(rng.uniform(-0.24, 0.24), rng.uniform(0.005, 0.1));
        if (ask::regionClassify(t) != ask::Region::MPlus) continue;
        pts.push_back({t, rng.uniform(-pi, pi), 0.0, 0.0});
    }
    int notPd = 0;
    for (const auto& row : hk::metricScan(pts, {}, hk::Exec::Parallel)) notPd += !(row.ok && row.positiveDefinite);
    r.cases.push_back(atMost("positive definite on N0, 30 points (failures)", notPd, 0));

    hk::HkOptions betaOnly;
    betaOnly.spectrum = hk::Spectrum::BetaOnly;
    double flavor = 0.0, route = 0.0, doubling = 0.0;
    for (int i = 0; i < 10; ++i) {
        const hk::FiberPoint p{cplx(rng.uniform(-0.3, 0.3), rng.uniform(0.01, 0.2)), rng.uniform(-pi, pi),
                               rng.uniform(-pi, pi), i < 5 ? 0.0 : rng.uniform(-1.0, 1.0)};
        hk::MetricResult a = hk::metricGN(p);
        flavor = std::max(flavor, (a.g - hk::metricGN(p, betaOnly).g).cwiseAbs().maxCoeff());
        route = std::max(route, (hk::kahlerForms(p).varpi - hk::varpiPerCharge(p)).cwiseAbs().maxCoeff());
        hk::HkOptions wide;
        wide.budget.nMax = 2 * hk::instantonSums(p).nMax;
        wide.budget.mMax = 2 * hk::autoMMax(std::abs(p.t), wide.R);
        const double change = (a.g - hk::metricGN(p, wide).g).cwiseAbs().maxCoeff();
        doubling = std::max(doubling, change / std::max(a.tailBound, 1e-300));
    }
    r.cases.push_back(atMost("flavor decoupling, max |g_full - g_beta|", flavor, 0.0));
    r.cases.push_back(below("two routes for omega1 + i omega2", route, kTwoRouteTol));
    r.cases.push_back(atMost("truncation doubling change / tail bound, 10 points", doubling, 1.0));
    return r;
}

// sum_{n != 0} V_n at t = 0, straight from K0
double sPrimeOracle(double thetaBeta) {
    double s = 0.0;
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= 12; ++m) s += 2.0 * std::cos(m * thetaBeta) * specfn::besselK(0, twoPi * m * n) / pi;
    return s;
}

CriterionResult ovSmoothing(const SuiteOptions&) {
    CriterionResult r{5, "Ooguri-Vafa smoothing", {}, {}};
    const double thetaBeta = 0.7;
    const double sp = sPrimeOracle(thetaBeta);
    double prev = INFINITY;
    int increases = 0;
    double d2[5] = {}, d3[5] = {};
    for (int k = 1; k <= 4; ++k) {
        const hk::FiberPoint p{std::polar(std::pow(10.0, -k), pi / 4.0), 0.3, thetaBeta};
        hk::SmoothingEta e = hk::smoothingEta(p);
        const double e1 = e.eta1.cwiseAbs().maxCoeff();
        increases += !(e1 < prev);
        prev = e1;
        d2[k] = std::abs(e.eta2(hk::kDt, hk::kDThetaB) + sp / twoPi);
        d3[k] = std::abs(e.eta3(hk::kDt, hk::kDtBar) - 0.5 * I * sp);
        r.notes.push_back("k=" + std::to_string(k) + " |eta1|=" + fmt(e1) + " eta2 dev=" + fmt(d2[k]) +
                          " eta3 dev=" + fmt(d3[k]));
    }
    r.cases.push_back(atMost("|eta1| strictly decreasing (violations)", increases, 0));
    r.cases.push_back(below("eta2 dt^dtheta_b limit at k=4", d2[4], kOvLimitTol));
    r.cases.push_back(below("eta3 dt^dtbar limit at k=4", d3[4], kOvLimitTol));
    // deviations are linear in |t|; a one-step extrapolation shows the limits themselves
    r.notes.push_back("supplementary: linearly extrapolated deviations at t=0: eta2 " + fmt(std::abs(d2[4] - (d2[3] - d2[4]) / 9.0)) +
                      ", eta3 " + fmt(std::abs(d3[4] - (d3[3] - d3[4]) / 9.0)));
    return r;
}

CriterionResult twistorCheck(const SuiteOptions&) {
    CriterionResult r{6, "twistor cross-check", {}, {}};
    double worst = 0.0;
    for (hk::FiberPoint p : {hk::FiberPoint{cplx(0.15, 0.25), 0.3, 0.4}, hk::FiberPoint{cplx(-0.1, 0.12), 1.1, -0.5}}) {
        const hk::TwoForm k = hk::kahlerForms(p).omega3;
        worst = std::max(worst, (twistor::omega3FromTwistor(p) - k).cwiseAbs().maxCoeff() / k.cwiseAbs().maxCoeff());
    }
    r.cases.push_back(below("omega3 extraction vs closed form, 2 points (relative)", worst, kTwistorTol));
    const hk::FiberPoint p{cplx(0.15, 0.25), 0.3, 0.4};
    // The finite-difference stencil moves the ray by ~diffStep/|t|, so each side
    // is sampled at 2, 4, 6 mrad and extrapolated to the ray (error O(eps^3)).
    const double ang = std::arg(-p.t), eps = 2e-3;
    auto side = [&](double sg) {
        auto v = [&](int j) { return twistor::varpiAt(p, std::polar(1.0, ang + sg * j * eps)); };
        return hk::TwoForm(3.0 * v(1) - 3.0 * v(2) + v(3));
    };
    const hk::TwoForm vp = side(1.0), vm = side(-1.0);
    const cplx zp = std::polar(1.0, ang + 1e-9), zm = std::polar(1.0, ang - 1e-9);
    r.cases.push_back(below("varpi across the beta ray (relative)", (vp - vm).cwiseAbs().maxCoeff() / vp.cwiseAbs().maxCoeff(),
                            kTwistorTol));
    r.notes.push_back("log X_bv jump across the same ray: " +
                      fmt(std::abs(twistor::logXBetaVee(p, zp) - twistor::logXBetaVee(p, zm))));
    return r;
}

CriterionResult conformalCore(const SuiteOptions& o) {
    CriterionResult r{7, "conformal-limit sums", {}, {}};
    oracle::Rng rng(o.seed + 7);
    double worst = 0.0;
    for (int tested = 0; tested < 20;) {
        const cplx t(rng.uniform(-0.6, 0.6), rng.uniform(0.2, 1.2));
        const cplx lam = std::polar(rng.uniform(0.3, 2.0), rng.uniform(-pi, pi));
        const int n = int(std::floor(rng.uniform(-3.0, 4.0)));
        const cplx w = (t + double(n)) / lam;
        if (std::abs(w.real()) < 0.05 || std::abs(w) < 0.2 || std::abs((1.0 / lam).real()) < 1e-3) continue;
        conformal::SectorContext ctx;
        try {
            ctx = conformal::makeContext(t, lam);
        } catch (const OnRayError&) {
            continue;
        }
        worst = std::max(worst, oracle::relErr(conformal::muTermSigned(n, ctx), oracle::muRayIntegral(n, t, lam)));
        ++tested;
    }
    r.cases.push_back(below("signed mu vs ray quadrature, 20 cases", worst, kMuTol));

    const cplx t(0.3, 0.8), lam(-0.8, -0.2);
    const auto ctx = conformal::makeContext(t, lam);
    const double C = std::abs(lam) * std::abs(t);
    using conformal::Ordering;
    double cauchy = 0.0, d[3];
    int i = 0;
    for (int N : {100, 200, 400}) {
        d[i] = std::abs(conformal::partialSum(ctx, 2 * N, Ordering::Paired) - conformal::partialSum(ctx, N, Ordering::Paired));
        cauchy = std::max(cauchy, d[i++] * N / C);
    }
    r.cases.push_back(below("N |S_2N - S_N| / (|lambda||t|), N = 100, 200, 400", cauchy, 1.0));
    r.cases.push_back(below("O(1/N) decay: |d(N)/d(2N) - 2|", std::abs(d[0] / d[1] - 2.0), 0.5));
    const int N = 10000;
    const double drift = std::abs(conformal::partialSum(ctx, N, Ordering::OneSided) - conformal::partialSum(ctx, N, Ordering::Paired));
    r.cases.push_back(above("one-sided drift / paired bound at N = 1e4", drift / (C / N), kDriftFactor));

    worst = 0.0;
    for (int tested = 0; tested < 10;) {
        const cplx tt(rng.uniform(-0.5, 0.5), rng.uniform(0.2, 1.0));
        const cplx l = std::polar(rng.uniform(0.3, 2.0), rng.uniform(-pi, pi));
        try {
            worst = std::max(worst, std::abs(conformal::conformalXBetaVee(tt, l) * conformal::conformalXBetaVee(tt, -l) - 1.0));
        } catch (const OnRayError&) {
            continue;
        }
        ++tested;
    }
    r.cases.push_back(below("X(t, lambda) X(t, -lambda) = 1, 10 cases", worst, kInversionTol));
    return r;
}

CriterionResult rhProperties(const SuiteOptions&) {
    CriterionResult r{8, "Riemann-Hilbert properties", {}, {}};
    const cplx t(0.3, 0.8);
    double worst = 0.0;
    for (int n = -2; n <= 2; ++n)
        for (auto f : {conformal::JumpFamily::Plus, conformal::JumpFamily::Minus})
            worst = std::max(worst, conformal::measureJump(t, n, f, 0.7).relError);
    r.cases.push_back(below("jump ratios across +-l_n, n = -2..2", worst, kJumpTol));

    const double mid = 0.5 * (bps::rayAngle(t, 0, 1) + bps::rayAngle(t, -1, 1));
    double prev = INFINITY;
    int increases = 0;
    for (int k = 0; k <= 10; ++k) {
        const cplx lam = std::polar(std::ldexp(1.0, -k), mid);
        const double dev = std::abs(conformal::logXInstBetaVee(conformal::makeContext(t, lam)).value);
        increases += !(dev < prev);
        prev = dev;
    }
    r.cases.push_back(atMost("lambda -> 0: |log(X e^{-2 pi i Z/lambda})| monotone (violations)", increases, 0));
    r.notes.push_back("|log(X e^{-2 pi i Z/lambda})| at |lambda| = 2^-10: " + fmt(prev));
    double k = 0.0;
    for (int j = 2; j <= 10; ++j) {
        const cplx lam = std::polar(std::ldexp(1.0, j), mid);
        k = std::max(k, std::abs(std::log(std::abs(conformal::conformalXBetaVee(t, lam)))) / std::log(std::abs(lam)));
    }
    r.cases.push_back(below("lambda -> infinity: max |log|X|| / log|lambda|", k, kGrowthExponent));
    return r;
}

CriterionResult conjectureCheck(const SuiteOptions& o) {
    CriterionResult r{9, "conjecture-check", {}, {}};
    oracle::Rng rng(o.seed + 9);
    for (int i = 0; i < 10; ++i) {
        const cplx t(rng.uniform(-0.4, 0.4), rng.uniform(0.4, 1.0));
        const double a0 = bps::rayAngle(t, 0, 1), am1 = bps::rayAngle(t, -1, 1);
        const cplx lam = std::polar(rng.uniform(0.3, 1.5), a0 + rng.uniform(0.15, 0.85) * (am1 - a0));
        std::ostringstream name;
        name.precision(4);
        name << "residual t=" << t << " lambda=" << lam;
        r.cases.push_back(below(name.str(), conjecture::conjectureResidual(t, lam, defaults().budget, o.qConstant),
                                kConjectureTol));
    }
    return r;
}

CriterionResult differenceEquation(const SuiteOptions& o) {
    CriterionResult r{10, "difference equation of F_np", {}, {}};
    oracle::Rng rng(o.seed + 10);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        cplx lambda, t;
        admissiblePoint(rng, lambda, t);
        const cplx lc = lambda / twoPi;
        worst = std::max(worst, std::abs(qdilog::fNonPert(lambda, t + lc) - qdilog::fNonPert(lambda, t) +
                                         qdilog::logQuantumDilogH(t, {lc, 1.0})));
    }
    r.cases.push_back(below("|F(t + lc) - F(t) + log H(t | lc, 1)|, 10 points", worst, kDiffEqTol));
    return r;
}

}  // namespace

CriterionResult runCriterion(int id, const SuiteOptions& o) {
    using Fn = CriterionResult (*)(const SuiteOptions&);
    static const Fn table[kCriteria] = {specialFunctions, picardFuchs,  askConsistency, metricStructure,
                                        ovSmoothing,      twistorCheck, conformalCore,  rhProperties,
                                        conjectureCheck,  differenceEquation};
    if (id < 1 || id > kCriteria) throw DomainError("acceptance: criterion out of range");
    try {
        return table[id - 1](o);
    } catch (const BudgetError&) {
        throw;
    } catch (const Error& e) {
        CriterionResult r{id, "error", {}, {}};
        r.cases.push_back({std::string("library error: ") + e.what(), NAN, "<", 0.0, false});
        return r;
    }
}

}  // namespace acceptance
