#pragma once

#include <optional>
#include <vector>

#include "conifold/bps.hpp"
#include "conifold/config.hpp"
#include "conifold/errors.hpp"

// Conformal-limit coordinates built from signed Binet-function sums.
// Nothing here depends on the multiple-sine code.
namespace conifold::conformal {

cplx conformalXBeta(cplx t, cplx lambda);
cplx conformalXDelta(cplx t, cplx lambda);

struct SectorContext {
    cplx t;
    cplx lambda;
    int M = 0;               // signs of a_n are patterned for |n| > M
    std::vector<int> signs;  // sign Re((t + n)/lambda) for n = -M..M
    int bSign = 0;           // sign Re(1/lambda)
    bps::BpsRay cw, ccw;     // bounding rays
    int sign(int n) const;
};
// Throws OnRayError if some a_n vanishes or Re(1/lambda) = 0; RegimeError if M
// exceeds the term budget.
SectorContext makeContext(cplx t, cplx lambda, const TruncationBudget& b = defaults().budget);

// mu(w) if Re w > 0, -mu(-w) if Re w < 0, w = (t + n)/lambda
cplx muTermSigned(int n, const SectorContext& ctx);

// Replace term n by sign * mu(sign * w), mu continued off Re > 0.
struct TermOverride {
    int n;
    int sign;
};

struct SumResult {
    cplx value;
    double tailBound;
    int pairs;  // explicit pairs summed
};
// n = 0 term + explicit pairs (n, -n) up to a cut where |(n +- t)/lambda| >= 25,
// then the pair tail in closed form from the asymptotic series of mu.
SumResult logXInstBetaVee(const SectorContext& ctx, const TruncationBudget& b = defaults().budget,
                          std::optional<TermOverride> over = std::nullopt);

enum class Ordering { Paired, OneSided };
// Paired: term 0 + sum_{n=1}^N (term n + term -n). OneSided: sum_{n=0}^N term n.
cplx partialSum(const SectorContext& ctx, int N, Ordering ord);
// Paired pairs summed from n = N down to 1 (reordered window).
cplx partialSumReversed(const SectorContext& ctx, int N);

cplx conformalXBetaVee(cplx t, cplx lambda, const TruncationBudget& b = defaults().budget);
// Same, with term n continued from the sector on the other side of its ray.
cplx conformalXBetaVeeContinued(cplx t, cplx lambda, int n, int sign,
                                const TruncationBudget& b = defaults().budget);

using bps::JumpFamily;
using bps::jumpFactor;

enum class InfiniteSide { PosSector, NegSector };
// PosSector: prod_{n>0} (1 - e^{-2 pi i (t+n)/lambda}) (1 - e^{2 pi i (t-n)/lambda})^{-1},
// the rays l_n, -l_{-n} (n > 0) accumulating at i R_+, crossed anticlockwise.
// NegSector: prod_{n>0} (1 - e^{-2 pi i (t-n)/lambda}) (1 - e^{2 pi i (t+n)/lambda})^{-1},
// the rays accumulating at -i R_+.
cplx infiniteProductJump(cplx t, cplx lambda, InfiniteSide which, const TruncationBudget& b = defaults().budget);

struct JumpMeasurement {
    cplx measured;   // X(ccw side) / X(cw side continued), at lambda_+
    cplx predicted;  // jumpFactor at lambda_+
    double relError;
};
// Measure the jump across l_n (Plus) or -l_n (Minus) at radius r, offsets +-guard radians.
JumpMeasurement measureJump(cplx t, int n, JumpFamily f, double radius, double guard = defaults().jumpGuard,
                            const TruncationBudget& b = defaults().budget);

// X_l(t, lambda) for the sector containing the direction `targetAngle`,
// continued to lambda in the half-plane centred on it.
cplx analyticContinuation(double targetAngle, cplx t, cplx lambda, const TruncationBudget& b = defaults().budget);

}  // namespace conifold::conformal
