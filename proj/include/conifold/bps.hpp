#pragma once

#include <vector>

#include "conifold/config.hpp"
#include "conifold/errors.hpp"

namespace conifold::bps {

// nBetaVee * beta_vee + nBeta * beta + nDelta * delta
struct Charge {
    int nBetaVee = 0;
    int nBeta = 0;
    int nDelta = 0;

    friend Charge operator+(Charge a, Charge b) {
        return {a.nBetaVee + b.nBetaVee, a.nBeta + b.nBeta, a.nDelta + b.nDelta};
    }
    friend Charge operator-(Charge a) { return {-a.nBetaVee, -a.nBeta, -a.nDelta}; }
    friend Charge operator-(Charge a, Charge b) { return a + (-b); }
    friend Charge operator*(int k, Charge a) { return {k * a.nBetaVee, k * a.nBeta, k * a.nDelta}; }
    friend bool operator==(Charge, Charge) = default;
};

inline constexpr Charge betaVee{1, 0, 0};
inline constexpr Charge beta{0, 1, 0};
inline constexpr Charge delta{0, 0, 1};

int pairing(Charge a, Charge b);
// BPS index of the resolved conifold: 1 on +-beta + n delta, -2 on k delta (k != 0)
int omega(Charge g);

struct ChargeWeight {
    Charge gamma;
    int omega;
};
// supp Omega with |n| <= nCut, ordered by |n|, then n, then sign of the beta component
std::vector<ChargeWeight> supportSpectrum(int nCut, bool includeFlavor = true);

struct ModuliPoint {
    cplx t;
    int sheet = 0;  // anticlockwise crossings of i R_{<=0}
};

bool inStrip(cplx t);
bool inM(cplx t, double wallTol = 1e-12);
bool inM0(cplx t, double wallTol = 1e-12);

cplx centralCharge(const ModuliPoint& p, Charge g);
cplx rescaledCentralCharge(const ModuliPoint& p, Charge g);
// Z_{beta_vee} on the principal sheet
cplx zBetaVee(cplx t);

struct ConvergenceReport {
    double partialSum;
    double tailBound;
    double flavorPart;
};
ConvergenceReport convergenceCheck(const ModuliPoint& p, double R, int nCut);
// min |Z_gamma| / |gamma| over supp Omega with |n| <= nCut
double supportRatio(const ModuliPoint& p, int nCut);

// ---- rays and sectors ----------------------------------------------------

struct BpsRay {
    bool infinite = false;
    int n = 0;          // ignored when infinite
    int orientation = 1;  // +1: l_n = i R_+ (t + n) (or i R_+), -1: the opposite ray
    double angle = 0.0;   // in [0, 2 pi)
    cplx direction() const { return std::polar(1.0, angle); }
};
bool sameRay(const BpsRay& a, const BpsRay& b);

double normalizeAngle(double a);
double rayAngle(cplx t, int n, int orientation);
std::vector<BpsRay> enumerateRays(cplx t, int nLo, int nHi);

struct SectorId {
    BpsRay cw;   // bounding ray clockwise from lambda
    BpsRay ccw;  // bounding ray anticlockwise from lambda
    int nLo = 0;
    std::vector<int> signs;  // sign a_n for n = nLo, nLo+1, ...
    int bSign = 0;
};
SectorId classifySector(cplx t, cplx lambda, int nLo = -10, int nHi = 10, double angTol = 1e-12);

// ---- jumps across rays (Im t > 0) ------------------------------------------

enum class JumpFamily { Plus, Minus };  // Plus: l_n = i R_+ (t + n), Minus: -l_n
// Factor gained when lambda crosses the ray anticlockwise:
// Plus: 1 - e^{-2 pi i (t+n)/lambda}; Minus: (1 - e^{2 pi i (t+n)/lambda})^{-1}
cplx jumpFactor(int n, cplx t, cplx lambda, JumpFamily f);

// Product of anticlockwise factors over every ray with angle strictly inside
// the signed arc from `from` to `to` (radians, unwrapped; a negative arc uses
// the inverse factors). Rays accumulating at +-i R_+ give convergent infinite
// products; ConvergenceError when they do not converge at this lambda,
// OrderingError when an end of the arc lies on a ray.
cplx arcJumpProduct(cplx t, cplx lambda, double from, double to, const TruncationBudget& b = {},
                    double angTol = 1e-12);

}  // namespace conifold::bps
