#include "conifold/conjecture.hpp"

#include <algorithm>
#include <cmath>

#include "conifold/bps.hpp"
#include "conifold/conformal.hpp"
#include "conifold/rh.hpp"

namespace conifold::conjecture {

double conjectureResidual(cplx t, cplx lambda, const TruncationBudget& b, qdilog::QConstant qc) {
    const cplx lhs = conformal::conformalXBetaVee(t, lambda, b);
    const cplx rhs = std::exp(twoPi * I * bps::zBetaVee(t) / lambda) * rh::rhSolutionPhi(t, lambda, b, qc);
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
}

std::vector<ResidualRow> residualPanel(const std::vector<std::pair<cplx, cplx>>& pts, Exec mode,
                                       const TruncationBudget& b, qdilog::QConstant qc) {
    std::vector<ResidualRow> rows(pts.size());
    const long n = long(pts.size());
    auto one = [&](long i) {
        ResidualRow& r = rows[std::size_t(i)];
        r.t = pts[std::size_t(i)].first;
        r.lambda = pts[std::size_t(i)].second;
        try {
            r.residual = conjectureResidual(r.t, r.lambda, b, qc);
            r.ok = true;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    };
    if (mode == Exec::Serial) {
        for (long i = 0; i < n; ++i) one(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) one(i);
    }
    return rows;
}

}  // namespace conifold::conjecture
