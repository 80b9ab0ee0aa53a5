#pragma once

#include <functional>
#include <vector>

#include "conifold/config.hpp"
#include "conifold/errors.hpp"

namespace conifold::specfn {

// Which side of the cut [1, inf) a boundary value is taken from.
enum class CutSide { None, Above, Below };

// B_n for n = 0..60 (exact rationals rounded to double).
double bernoulli(int n);
// Riemann zeta at integers s <= 3 (s != 1); used by the polylog expansions.
double zetaInt(int s);

cplx li2(cplx z, CutSide side = CutSide::None);
cplx li3(cplx z, CutSide side = CutSide::None);
// Li_s for s in {1, 0, -1, -2}: rational functions / -log(1 - z)
cplx liNonPositive(int s, cplx z);

cplx log1pc(cplx w);

// Scaled e^x K_nu(x), nu in {0, 1}
double besselKScaled(int nu, double x);
double besselK(int nu, double x);

// Analytic log Gamma on C minus (-inf, 0]; agrees with the principal
// branch of log Gamma for Re z > 0 and continues it across Re z = 0.
cplx logGamma(cplx z);
cplx digamma(cplx z);
// Hurwitz zeta zeta(s, a) for integer s >= 2 and |a| large, Re a > 0.
cplx hurwitzZetaLarge(int s, cplx a);

cplx binetMu(cplx z);
// Same function continued off Re z > 0 (through log Gamma); used to
// compare coordinates on both sides of a BPS ray.
cplx binetMuContinued(cplx z);

struct AsymptoticValue {
    cplx value;
    double errorEstimate;
};
AsymptoticValue binetMuAsymptotic(cplx z, int order);

double expIntE1(double x);

// Coefficient B_{r,n}(z | omegas) of the generating function
// x^r e^{zx} / prod (e^{w_i x} - 1) = sum x^n / n! B_{r,n}.
cplx genBernoulliPoly(int r, int n, cplx z, const std::vector<cplx>& omegas);

// ---- quadrature ----------------------------------------------------------

struct QuadResult {
    cplx value;
    double errorEstimate;
    int evaluations;
};

using CFun = std::function<cplx(double)>;

// Adaptive Gauss-Kronrod 10/21 on [a, b]; complex integrand.
QuadResult integrateGK(const CFun& f, double a, double b, double absTol, double relTol,
                       int maxDepth = 60);
// Same on [a, inf) through x = a + u/(1-u).
QuadResult integrateGKToInf(const CFun& f, double a, double absTol, double relTol,
                            int maxDepth = 60);

}  // namespace conifold::specfn
