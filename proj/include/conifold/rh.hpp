#pragma once

#include "conifold/config.hpp"
#include "conifold/errors.hpp"
#include "conifold/qdilog.hpp"

// Riemann-Hilbert solution built from the quantum dilogarithm and the ray
// jump factors only; independent of the conformal-limit sums.
namespace conifold::rh {

// Angle of the base sector (l_0, l_{-1}) midpoint.
double baseSectorMid(cplx t);

// Phi_{beta_vee}(t, 1, lambda) for Im t > 0, lambda off the BPS rays and off R.
// In (l_0, l_{-1}) this is H(t | 1, -lambda) e^{Q_H(t | 1, -lambda)}; other sectors
// apply the anticlockwise jump factors between the base sector and lambda.
cplx rhSolutionPhi(cplx t, cplx lambda, const TruncationBudget& b = defaults().budget,
                   qdilog::QConstant qc = qdilog::QConstant::Imaginary);

}  // namespace conifold::rh
