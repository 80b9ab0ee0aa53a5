#include "conifold/hk.hpp"

#include <cmath>

#include "conifold/ask.hpp"
#include "conifold/specfn.hpp"

namespace conifold::hk {

using specfn::besselKScaled;

TwoForm wedge(const OneForm& a, const OneForm& b) { return a * b.transpose() - b * a.transpose(); }

TwoForm conjugateForm(const TwoForm& f) {
    // permutation dt <-> dtbar
    Eigen::Matrix4cd P = Eigen::Matrix4cd::Zero();
    P(0, 1) = P(1, 0) = P(2, 2) = P(3, 3) = 1.0;
    return P * f.conjugate() * P;
}

namespace {

OneForm unit(int slot) {
    OneForm e = OneForm::Zero();
    e(slot) = 1.0;
    return e;
}

const OneForm eT = unit(kDt), eTb = unit(kDtBar), eA = unit(kDThetaBV), eB = unit(kDThetaB);

// sqrt(pi/(2x)) e^{-x}; K0 lies below it, K1 below twice it times (1 + 1/x)
double besselEnvelope(double x) { return std::sqrt(pi / (2.0 * x)) * std::exp(-x); }

double mTail(double x, int M, bool k1) {
    double xm = (M + 1) * x;
    double env = besselEnvelope(xm) * (k1 ? 2.0 * (1.0 + 1.0 / xm) : 1.0);
    return env / (1.0 - std::exp(-x));
}

int chooseM(double r, const HkOptions& o) {
    if (o.budget.mMax > 0) return o.budget.mMax;
    int m = autoMMax(r, o.R);
    if (m > o.budget.maxTerms) throw BudgetError("instanton m-sum exceeds max_terms");
    return m;
}

int chooseN(cplx t, const HkOptions& o) { return o.budget.nMax > 0 ? o.budget.nMax : autoNMax(t, o.R); }

struct BesselSums {
    cplx k0;  // sum e^{i m theta} K0(m x)
    cplx k1;  // sum e^{i m theta} K1(m x)
    double tail0, tail1;
};

BesselSums besselSums(double theta, double x, int M) {
    BesselSums s{0.0, 0.0, 0.0, 0.0};
    for (int m = 1; m <= M; ++m) {
        double mx = m * x;
        if (mx > 745.0) break;
        double e = std::exp(-mx);
        cplx ph = std::polar(1.0, m * theta);
        s.k0 += ph * (besselKScaled(0, mx) * e);
        s.k1 += ph * (besselKScaled(1, mx) * e);
    }
    s.tail0 = mTail(x, M, false);
    s.tail1 = mTail(x, M, true);
    return s;
}

// n-sum tail of sum_{|n| > N} sum_m K(2 pi m R |t - n|), using |t - n| >= |n| - |t|
double nTail(cplx t, int N, double R, bool k1) {
    double r0 = (N + 1) - std::abs(t);
    if (r0 <= 0.0) return INFINITY;
    double x0 = twoPi * R * r0;
    double per = besselEnvelope(x0) * (k1 ? 2.0 * (1.0 + 1.0 / x0) : 1.0) / (1.0 - std::exp(-x0));
    return 2.0 * per / (1.0 - std::exp(-twoPi * R));
}

}  // namespace

int autoNMax(cplx t, double R) { return int(std::ceil(46.0 / (twoPi * R) + std::abs(t) + 1.0)); }

int autoMMax(double r, double R) { return int(std::ceil(46.0 / (twoPi * R * r))) + 1; }

Estimate vInst(int n, const FiberPoint& p, const HkOptions& o) {
    const double r = std::abs(p.t - double(n));
    if (r == 0.0) throw SingularityError("vInst: t = n");
    const double x = twoPi * o.R * r;
    const double lead = besselEnvelope(x);
    if (lead < 1e-90) return {0.0, 2.0 * lead / (pi * (1.0 - std::exp(-x)))};
    const double th = p.thetaBeta - n * p.thetaDelta;
    const int M = chooseM(r, o);
    double sum = 0.0;
    for (int m = 1; m <= M; ++m) {
        double mx = m * x;
        if (mx > 745.0) break;
        sum += std::cos(m * th) * besselKScaled(0, mx) * std::exp(-mx);
    }
    return {sum / pi, mTail(x, M, false) / pi};
}

CEstimate aInstCoeff(int n, const FiberPoint& p, const HkOptions& o) {
    const double r = std::abs(p.t - double(n));
    if (r == 0.0) throw SingularityError("aInstCoeff: t = n");
    const double x = twoPi * o.R * r;
    const double pref = o.R * r / twoPi;
    const double lead = besselEnvelope(x);
    if (lead < 1e-90) return {0.0, pref * 2.0 * lead * (1.0 + 1.0 / x) / (1.0 - std::exp(-x))};
    const double th = p.thetaBeta - n * p.thetaDelta;
    const int M = chooseM(r, o);
    double sum = 0.0;
    for (int m = 1; m <= M; ++m) {
        double mx = m * x;
        if (mx > 745.0) break;
        sum += std::sin(m * th) * besselKScaled(1, mx) * std::exp(-mx);
    }
    return {-I * pref * sum, pref * mTail(x, M, true)};
}

InstantonSums instantonSums(const FiberPoint& p, const HkOptions& o) {
    InstantonSums s;
    s.nMax = chooseN(p.t, o);
    const cplx tb = std::conj(p.t);
    for (int a = 0; a <= s.nMax; ++a) {
        for (int n : {a, -a}) {
            Estimate v = vInst(n, p, o);
            CEstimate c = aInstCoeff(n, p, o);
            s.S += v.value;
            s.tailS += v.tailBound;
            s.alpha += c.value / (p.t - double(n));
            s.alphaBar += c.value / (tb - double(n));
            s.tailAlpha += c.tailBound / std::abs(p.t - double(n));
            if (a == 0) break;
        }
    }
    s.tailS += nTail(p.t, s.nMax, o.R, false) / pi;
    s.tailAlpha += o.R / twoPi * nTail(p.t, s.nMax, o.R, true);
    return s;
}

Estimate nInstBeta(const FiberPoint& p, const HkOptions& o) {
    InstantonSums s = instantonSums(p, o);
    return {s.S, s.tailS};
}

namespace {

OneForm wFromSums(cplx tauV, const InstantonSums& s) {
    OneForm w;
    w << twoPi * s.alpha, -twoPi * s.alphaBar, 1.0, -tauV - I * s.S;
    return w;
}

// Per-charge instanton data over supp Omega, filtered by <beta_vee, gamma> != 0.
struct ChargeSums {
    cplx nInst = 0.0;          // sum Omega n_g^2 V_gamma
    OneForm wInst = OneForm::Zero();
    TwoForm varpiInst = TwoForm::Zero();
    TwoForm omega3Inst = TwoForm::Zero();
};

ChargeSums chargeSums(const FiberPoint& p, const HkOptions& o) {
    ChargeSums cs;
    const int N = chooseN(p.t, o);
    const bool flavor = o.spectrum == Spectrum::FullSupport;
    for (const auto& cw : bps::supportSpectrum(N, flavor)) {
        const bps::Charge g = cw.gamma;
        const int ng = bps::pairing(bps::betaVee, g);
        if (ng == 0) continue;
        const cplx Z = double(g.nBeta) * p.t + double(g.nDelta);
        const double r = std::abs(Z);
        if (r == 0.0) throw SingularityError("charge with vanishing central charge");
        const double theta = g.nBetaVee * p.thetaBetaVee + g.nBeta * p.thetaBeta + g.nDelta * p.thetaDelta;
        const double x = twoPi * o.R * r;
        cplx V = 0.0, a = 0.0;
        if (besselEnvelope(x) >= 1e-90) {
            BesselSums b = besselSums(theta, x, chooseM(r, o));
            V = b.k0 / twoPi;
            a = -(o.R * r / (4.0 * pi)) * b.k1;
        }
        const double om = cw.omega;
        OneForm dZ = double(g.nBeta) * eT;
        OneForm dZb = double(g.nBeta) * eTb;
        OneForm dTheta = double(g.nBetaVee) * eA + double(g.nBeta) * eB;
        OneForm A = a * (dZ / Z - dZb / std::conj(Z));
        cs.nInst += om * double(ng * ng) * V;
        cs.wInst += om * double(ng) * (twoPi * A - I * V * dTheta);
        cs.varpiInst += om * (wedge(dZ, A) + (I / twoPi) * V * wedge(dTheta, dZ));
        cs.omega3Inst += om * ((0.5 * I) * V * wedge(dZ, dZb) + wedge(dTheta, A) / twoPi);
    }
    return cs;
}

}  // namespace

OneForm wCoeffs(const FiberPoint& p, const HkOptions& o) {
    return wFromSums(ask::tau(p.t), instantonSums(p, o));
}

MetricMatrix assembleMetric(double N, const OneForm& W) {
    if (std::abs(N) < defaults().degenerateTol) throw DegenerateError("N_beta + N^inst vanishes");
    Eigen::Vector4cd w;
    w << W(kDt) + W(kDtBar), I * (W(kDt) - W(kDtBar)), W(kDThetaBV), W(kDThetaB);
    MetricMatrix g = (w * w.adjoint()).real() / (4.0 * pi * pi * N);
    g(0, 0) += N;
    g(1, 1) += N;
    // exact symmetry
    MetricMatrix gs = 0.5 * (g + g.transpose());
    return gs;
}

MetricResult metricGN(const FiberPoint& p, const HkOptions& o) {
    const double imT = ask::imTau(p.t);
    const cplx tauV = ask::tau(p.t);
    ChargeSums cs = chargeSums(p, o);
    const double N = imT + cs.nInst.real();
    OneForm W = cs.wInst;
    W(kDThetaBV) += 1.0;
    W(kDThetaB) += -tauV;
    MetricResult res{assembleMetric(N, W), N, 0.0};

    InstantonSums s = instantonSums(p, o);
    const double wn = std::sqrt(std::pow(4.0 * pi * std::abs(s.alpha), 2) + 1.0 + std::norm(tauV + I * s.S));
    const double eps = 4.0 * pi * std::sqrt(2.0) * s.tailAlpha + s.tailS;
    const double dN = s.tailS;
    res.tailBound = 2.0 * (dN * (1.0 + wn * wn / (4.0 * pi * pi * N * N)) +
                           (2.0 * wn + eps) * eps / (4.0 * pi * pi * std::abs(N)));
    return res;
}

Eigen::Matrix2d fiberBlock(const FiberPoint& p, const HkOptions& o) {
    const double N = ask::imTau(p.t) + nInstBeta(p, o).value;
    if (std::abs(N) < defaults().degenerateTol) throw DegenerateError("N_beta + N^inst vanishes");
    OneForm W = wCoeffs(p, o);
    Eigen::Matrix2d f;
    const cplx a = W(kDThetaBV), b = W(kDThetaB);
    f(0, 0) = std::norm(a);
    f(1, 1) = std::norm(b);
    f(0, 1) = f(1, 0) = (a * std::conj(b)).real();
    return f / (4.0 * pi * pi * N);
}

bool positiveDefinite(const MetricMatrix& g) {
    Eigen::SelfAdjointEigenSolver<MetricMatrix> es(g);
    return es.eigenvalues().minCoeff() > 0.0;
}

bool negativeDefinite(const MetricMatrix& g) {
    Eigen::SelfAdjointEigenSolver<MetricMatrix> es(g);
    return es.eigenvalues().maxCoeff() < 0.0;
}

TwoForm varpiFromW(const FiberPoint& p, const HkOptions& o) { return wedge(eT, wCoeffs(p, o)) / twoPi; }

TwoForm varpiPerCharge(const FiberPoint& p, const HkOptions& o) {
    const cplx tauV = ask::tau(p.t);
    // <dZ ^ dtheta> = dZ_bv ^ dtheta_b - dZ_b ^ dtheta_bv
    TwoForm pairingTerm = tauV * wedge(eT, eB) - wedge(eT, eA);
    return -pairingTerm / twoPi + chargeSums(p, o).varpiInst;
}

TwoForm omega3PerCharge(const FiberPoint& p, const HkOptions& o) {
    const cplx tauV = ask::tau(p.t);
    // (1/4)<dZ ^ dZbar> - (1/8 pi^2)<dtheta ^ dtheta>
    TwoForm sf = 0.25 * (tauV - std::conj(tauV)) * wedge(eT, eTb) - (2.0 / (8.0 * pi * pi)) * wedge(eA, eB);
    return sf + chargeSums(p, o).omega3Inst;
}

KahlerForms kahlerForms(const FiberPoint& p, const HkOptions& o) {
    const cplx tauV = ask::tau(p.t);
    const double imT = ask::imTau(p.t);
    InstantonSums s = instantonSums(p, o);
    const double N = imT + s.S;
    if (std::abs(N) < defaults().degenerateTol) throw DegenerateError("N_beta + N^inst vanishes");
    OneForm W = wFromSums(tauV, s);
    OneForm A;
    A << s.alpha, -s.alphaBar, 0.0, 0.0;
    KahlerForms k;
    k.varpi = wedge(eT, W) / twoPi;
    k.omega3 = (0.5 * I * N) * wedge(eT, eTb) - wedge(eA, eB) / (4.0 * pi * pi) + wedge(eB, A) / twoPi;
    TwoForm c = conjugateForm(k.varpi);
    k.omega1 = 0.5 * (k.varpi + c);
    k.omega2 = (k.varpi - c) / (2.0 * I);
    return k;
}

cplx ovTau(cplx t, cplx Lambda) {
    if (t == 0.0) throw SingularityError("ovTau: t = 0");
    return std::log(t / Lambda) / (twoPi * I);
}

OvForms ovForms(const FiberPoint& p, cplx Lambda, const HkOptions& o, bool instanton) {
    const cplx tov = ovTau(p.t, Lambda);
    double V0 = 0.0;
    cplx c0 = 0.0;
    if (instanton) {
        V0 = vInst(0, p, o).value;
        c0 = aInstCoeff(0, p, o).value;
    }
    OneForm A;
    A << c0 / p.t, -c0 / std::conj(p.t), 0.0, 0.0;
    OneForm Y;
    Y << twoPi * A(0), twoPi * A(1), 1.0, -tov - I * V0;
    OvForms f;
    f.varpi = wedge(eT, Y) / twoPi;
    f.omega3 = (0.5 * I * (tov.imag() + V0)) * wedge(eT, eTb) - wedge(eA, eB) / (4.0 * pi * pi) +
               wedge(eB, A) / twoPi;
    return f;
}

MetricMatrix ovMetric(const FiberPoint& p, cplx Lambda, const HkOptions& o) {
    const cplx tov = ovTau(p.t, Lambda);
    const double V0 = vInst(0, p, o).value;
    const cplx c0 = aInstCoeff(0, p, o).value;
    OneForm Y;
    Y << twoPi * c0 / p.t, -twoPi * c0 / std::conj(p.t), 1.0, -tov - I * V0;
    return assembleMetric(tov.imag() + V0, Y);
}

SmoothingEta smoothingEta(const FiberPoint& p, const HkOptions& o) {
    KahlerForms k = kahlerForms(p, o);
    OvForms ov = ovForms(p, defaults().ovLambda, o);
    TwoForm d = k.varpi - ov.varpi;
    SmoothingEta e;
    e.eta1 = d.real().cast<cplx>();
    e.eta2 = d.imag().cast<cplx>();
    e.eta3 = k.omega3 - ov.omega3;
    return e;
}

Estimate sPrimeAtZero(const FiberPoint& p, const HkOptions& o) {
    FiberPoint z = p;
    z.t = 0.0;
    const int N = o.budget.nMax > 0 ? o.budget.nMax : autoNMax(0.0, o.R);
    double sum = 0.0, tail = 0.0;
    for (int a = 1; a <= N; ++a)
        for (int n : {a, -a}) {
            Estimate v = vInst(n, z, o);
            sum += v.value;
            tail += v.tailBound;
        }
    tail += nTail(0.0, N, o.R, false) / pi;
    return {sum, tail};
}

double tensorT(const FiberPoint& p, const HkOptions& o) {
    if (p.thetaDelta != 0.0) throw DomainError("tensorT: requires theta_delta = 0");
    const int N = chooseN(p.t, o);
    double inst = 0.0;
    for (int n = -N; n <= N; ++n) {
        const double r = std::abs(p.t - double(n));
        if (r == 0.0) throw SingularityError("tensorT: t = n");
        const double x = twoPi * o.R * r;
        const int M = chooseM(r, o);
        for (int m = 1; m <= M && m * x < 745.0; ++m)
            inst += std::cos(m * p.thetaBeta) * specfn::besselK(0, m * x);
    }
    return ask::imTau(p.t) + inst / pi;
}

MetricMatrix semiflatMetric(const FiberPoint& p) {
    const double imT = ask::imTau(p.t);
    OneForm W;
    W << 0.0, 0.0, 1.0, -ask::tau(p.t);
    return assembleMetric(imT, W);
}

}  // namespace conifold::hk
