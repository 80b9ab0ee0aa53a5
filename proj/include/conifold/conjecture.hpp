#pragma once

#include <string>
#include <vector>

#include "conifold/config.hpp"
#include "conifold/qdilog.hpp"

namespace conifold::conjecture {

// |X - e^{2 pi i Z_bv / lambda} Phi| / max(|X|, |e^{...} Phi|), X from the
// conformal-limit sums and Phi from the quantum dilogarithm.
double conjectureResidual(cplx t, cplx lambda, const TruncationBudget& b = defaults().budget,
                          qdilog::QConstant qc = qdilog::QConstant::Imaginary);

struct ResidualRow {
    cplx t, lambda;
    bool ok = false;
    double residual = 0.0;
    std::string error;
};
// Independent (t, lambda) queries; rows returned in input order.
std::vector<ResidualRow> residualPanel(const std::vector<std::pair<cplx, cplx>>& pts, Exec mode,
                                       const TruncationBudget& b = defaults().budget,
                                       qdilog::QConstant qc = qdilog::QConstant::Imaginary);

}  // namespace conifold::conjecture
