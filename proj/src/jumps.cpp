#include <cmath>

#include "conifold/bps.hpp"

namespace conifold::bps {

namespace {

cplx exponentOf(int n, cplx t, cplx lambda, JumpFamily f) {
    const cplx e = twoPi * I * (t + double(n)) / lambda;
    return f == JumpFamily::Plus ? -e : e;
}

// factor from its exponent; 1 - e^E, inverted for the Minus family
cplx factorFrom(cplx E, JumpFamily f) {
    const cplx v = 1.0 - std::exp(E);
    return f == JumpFamily::Plus ? v : 1.0 / v;
}

// n(psi) = Im t cot psi - Re t, the real shift putting t + n on the ray arg = psi
double shiftAt(cplx t, double psi) { return t.imag() * std::cos(psi) / std::sin(psi) - t.real(); }

struct Span {
    long lo, hi;      // inclusive
    bool loInf, hiInf;
};

cplx productOver(cplx t, cplx lambda, JumpFamily f, const Span& s, const TruncationBudget& b) {
    cplx prod = 1.0;
    if (!s.loInf && !s.hiInf) {
        for (long n = s.lo; n <= s.hi; ++n) prod *= factorFrom(exponentOf(int(n), t, lambda, f), f);
        return prod;
    }
    // one unbounded end; walk outward from the finite one
    const int dir = s.hiInf ? 1 : -1;
    const double slope = (exponentOf(1, t, lambda, f) - exponentOf(0, t, lambda, f)).real() * dir;
    if (!(slope < 0.0)) throw ConvergenceError("jump product: exponent real part does not decrease");
    long n = s.hiInf ? s.lo : s.hi;
    for (long k = 0;; ++k, n += dir) {
        if (k > b.maxTerms) throw BudgetError("jump product: max_terms reached");
        const cplx E = exponentOf(int(n), t, lambda, f);
        prod *= factorFrom(E, f);
        if (E.real() < std::log(1e-17)) break;
    }
    return prod;
}

}  // namespace

cplx jumpFactor(int n, cplx t, cplx lambda, JumpFamily f) {
    if (lambda == 0.0) throw DomainError("jumpFactor: lambda = 0");
    return factorFrom(exponentOf(n, t, lambda, f), f);
}

cplx arcJumpProduct(cplx t, cplx lambda, double from, double to, const TruncationBudget& b, double angTol) {
    if (!(t.imag() > 0.0)) throw DomainError("arcJumpProduct: requires Im t > 0");
    if (from == to) return 1.0;
    const bool ccw = to > from;
    const double lo = std::min(from, to), hi = std::max(from, to);
    if (hi - lo >= twoPi) throw DomainError("arcJumpProduct: arc of a full turn");
    cplx prod = 1.0;
    for (JumpFamily f : {JumpFamily::Plus, JumpFamily::Minus}) {
        const double base = f == JumpFamily::Plus ? 0.5 * pi : 1.5 * pi;
        for (int k = -3; k <= 3; ++k) {
            // ray angle = base + 2 pi k + psi with psi = arg(t + n) in (0, pi)
            const double off = base + twoPi * k;
            double p1 = lo - off, p2 = hi - off;
            if (p2 <= 0.0 || p1 >= pi) continue;
            const bool hiInf = p1 <= 0.0;  // psi -> 0 means n -> +inf
            const bool loInf = p2 >= pi;   // psi -> pi means n -> -inf
            if (hiInf && loInf) throw DomainError("arcJumpProduct: arc contains a whole ray family");
            Span s{0, 0, loInf, hiInf};
            if (!hiInf) {
                const double x = shiftAt(t, p1);
                s.hi = long(std::ceil(x)) - 1;
            }
            if (!loInf) {
                const double x = shiftAt(t, p2);
                s.lo = long(std::floor(x)) + 1;
            }
            // arc ends must not sit on a ray
            for (double end : {from, to}) {
                const double psi = end - off;
                if (psi <= 0.0 || psi >= pi) continue;
                const double x = shiftAt(t, psi);
                const long near = std::lround(x);
                const double a = std::arg(t + double(near));
                if (std::abs(a - psi) < angTol) throw OrderingError("arcJumpProduct: arc end on a BPS ray");
            }
            if (!s.loInf && !s.hiInf && s.lo > s.hi) continue;
            prod *= productOver(t, lambda, f, s, b);
        }
    }
    return ccw ? prod : 1.0 / prod;
}

}  // namespace conifold::bps
