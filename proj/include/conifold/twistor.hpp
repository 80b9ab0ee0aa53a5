#pragma once

#include "conifold/hk.hpp"

namespace conifold::twistor {

using hk::Exec;
using hk::FiberPoint;
using hk::TwoForm;

struct TwistorOptions {
    hk::HkOptions hk{};
    double quadStep = 0.01;  // trapezoid step in s
    double sMax = 6.0;       // integrate s over [-sMax, sMax]
    double diffStep = 1e-4;  // central-difference step in (Re t, Im t, theta_bv, theta_b)
    int samples = 8;         // points on |zeta| = 1
    Exec exec = Exec::Parallel;
};

// pi R Z_bv / zeta + i theta_bv + pi R zeta conj(Z_bv)
cplx logXSemiflat(const FiberPoint& p, cplx zeta, double R = 1.0);

// int ds (zeta' + zeta)/(zeta' - zeta) log(1 - exp(-2 pi R |Z| cosh s + i theta)),
// zeta' = -(Z/|Z|) e^s. Throws OnRayError if zeta sits on the ray of Z.
cplx rayIntegral(cplx Z, double theta, cplx zeta, const TwistorOptions& o = {});

// log X_{beta_vee}(zeta) with the first-order instanton correction from +-beta + n delta
cplx logXBetaVee(const FiberPoint& p, cplx zeta, const TwistorOptions& o = {});

// varpi(zeta) = (1/4 pi^2) dlog X_bv ^ dlog X_b in the complex frame
TwoForm varpiAt(const FiberPoint& p, cplx zeta, const TwistorOptions& o = {});

// zeta^0 coefficient of varpi(zeta), sampled on the unit circle
TwoForm omega3FromTwistor(const FiberPoint& p, const TwistorOptions& o = {});

}  // namespace conifold::twistor
