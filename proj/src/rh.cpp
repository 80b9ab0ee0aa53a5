#include "conifold/rh.hpp"

#include <cmath>

#include "conifold/bps.hpp"

namespace conifold::rh {

double baseSectorMid(cplx t) {
    return 0.5 * (bps::rayAngle(t, 0, 1) + bps::rayAngle(t, -1, 1));
}

cplx rhSolutionPhi(cplx t, cplx lambda, const TruncationBudget& b, qdilog::QConstant qc) {
    if (!(t.imag() > 0.0)) throw DomainError("rhSolutionPhi: requires Im t > 0");
    if (lambda == 0.0) throw DomainError("rhSolutionPhi: lambda = 0");
    bps::classifySector(t, lambda, 0, 0, defaults().rayAngleTol);  // OnRayError on a ray
    // The base formula is analytic in lambda off R_+, so walk inside (0, 2 pi).
    double phi = std::arg(lambda);
    if (phi <= 0.0) phi += twoPi;
    if (phi >= twoPi || phi <= 0.0) throw DomainError("rhSolutionPhi: lambda on R_+");
    if (std::abs(lambda.imag()) < 1e-12 * std::abs(lambda))
        throw DomainError("rhSolutionPhi: lambda on R_-, where H(t | 1, -lambda) has a real period ratio");
    const cplx w2 = -lambda;
    const cplx base = qdilog::quantumDilogH(t, {1.0, w2}) * std::exp(qdilog::qCorrection(t, 1.0, w2, qc));
    return base * bps::arcJumpProduct(t, lambda, baseSectorMid(t), phi, b, defaults().rayAngleTol);
}

}  // namespace conifold::rh
