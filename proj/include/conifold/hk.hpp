#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "conifold/bps.hpp"
#include "conifold/config.hpp"
#include "conifold/errors.hpp"

namespace conifold::hk {

struct FiberPoint {
    cplx t;
    double thetaBetaVee = 0.0;
    double thetaBeta = 0.0;
    double thetaDelta = 0.0;
};

// Frame {dt, dtbar, dtheta_bv, dtheta_b}; a 2-form is the antisymmetric
// matrix C with form = sum_{i<j} C(i,j) e_i ^ e_j.
enum Slot { kDt = 0, kDtBar = 1, kDThetaBV = 2, kDThetaB = 3 };
using OneForm = Eigen::Vector4cd;
using TwoForm = Eigen::Matrix4cd;
using MetricMatrix = Eigen::Matrix4d;  // coordinates (Re t, Im t, theta_bv, theta_b)

TwoForm wedge(const OneForm& a, const OneForm& b);
// complex conjugate of a form: conjugate coefficients and swap dt <-> dtbar
TwoForm conjugateForm(const TwoForm& f);

enum class Spectrum { BetaOnly, FullSupport };

struct HkOptions {
    TruncationBudget budget = defaults().budget;
    double R = defaults().R;
    Spectrum spectrum = Spectrum::FullSupport;
};

struct Estimate {
    double value;
    double tailBound;
};
struct CEstimate {
    cplx value;
    double tailBound;
};

int autoNMax(cplx t, double R);
int autoMMax(double r, double R);

// V_n: (1/pi) sum_{m>0} cos(m theta_n) K0(2 pi m R |t - n|), theta_n = theta_b - n theta_d
Estimate vInst(int n, const FiberPoint& p, const HkOptions& o = {});
// c_n: -(i/2pi) sum_{m>0} sin(m theta_n) R|t - n| K1(2 pi m R |t - n|)
CEstimate aInstCoeff(int n, const FiberPoint& p, const HkOptions& o = {});

// Per-n instanton sums, |n| <= nMax.
struct InstantonSums {
    double S = 0.0;         // sum_n V_n
    cplx alpha = 0.0;       // sum_n c_n / (t - n)
    cplx alphaBar = 0.0;    // sum_n c_n / (tbar - n)
    double tailS = 0.0;
    double tailAlpha = 0.0;
    int nMax = 0;
};
InstantonSums instantonSums(const FiberPoint& p, const HkOptions& o = {});

Estimate nInstBeta(const FiberPoint& p, const HkOptions& o = {});
// W + W^inst
OneForm wCoeffs(const FiberPoint& p, const HkOptions& o = {});

struct MetricResult {
    MetricMatrix g;
    double N;          // N_beta + N^inst
    double tailBound;  // bound on max |entry change| from truncation
};
MetricResult metricGN(const FiberPoint& p, const HkOptions& o = {});
// fiber block (theta_bv, theta_b) from nInstBeta / wCoeffs, independent of metricGN
Eigen::Matrix2d fiberBlock(const FiberPoint& p, const HkOptions& o = {});
bool positiveDefinite(const MetricMatrix& g);
bool negativeDefinite(const MetricMatrix& g);

struct KahlerForms {
    TwoForm omega1, omega2, omega3;  // real forms
    TwoForm varpi;                   // omega1 + i omega2
};
KahlerForms kahlerForms(const FiberPoint& p, const HkOptions& o = {});
// omega1 + i omega2 summed charge by charge over supp Omega
TwoForm varpiPerCharge(const FiberPoint& p, const HkOptions& o = {});
// (1/2pi) dt ^ (W + W^inst)
TwoForm varpiFromW(const FiberPoint& p, const HkOptions& o = {});
TwoForm omega3PerCharge(const FiberPoint& p, const HkOptions& o = {});

// ---- Ooguri-Vafa comparison -------------------------------------------

cplx ovTau(cplx t, cplx Lambda);
struct OvForms {
    TwoForm varpi;   // omega1^ov + i omega2^ov
    TwoForm omega3;
};
OvForms ovForms(const FiberPoint& p, cplx Lambda, const HkOptions& o = {}, bool instanton = true);
MetricMatrix ovMetric(const FiberPoint& p, cplx Lambda, const HkOptions& o = {});

struct SmoothingEta {
    TwoForm eta1, eta2, eta3;  // eta1/eta2: real/imag coefficients of varpi - varpi^ov
};
SmoothingEta smoothingEta(const FiberPoint& p, const HkOptions& o = {});
// sum_{n != 0} V_n at t = 0
Estimate sPrimeAtZero(const FiberPoint& p, const HkOptions& o = {});

// ---- T tensor and semi-flat metric ------------------------------------------

double tensorT(const FiberPoint& p, const HkOptions& o = {});
MetricMatrix semiflatMetric(const FiberPoint& p);

// Metric from N and W' (shared assembly)
MetricMatrix assembleMetric(double N, const OneForm& W);

// ---- grid scans ------------------------------------------------------------

using conifold::Exec;

struct MetricScanRow {
    FiberPoint p;
    bool ok = false;
    MetricResult metric{};
    bool positiveDefinite = false;
    std::string error;
};
// Parallel rows are computed independently and stored by index, so both
// modes return identical rows in grid order.
std::vector<MetricScanRow> metricScan(const std::vector<FiberPoint>& pts, const HkOptions& o, Exec mode);

}  // namespace conifold::hk
