#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::specfn {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kStirlingRadius = 15.0;
constexpr int kStirlingTerms = 10;

// sum_{k=1}^{10} B_2k / (2k(2k-1) w^{2k-1}); truncation error < 1e-23 at |w| = 15
cplx stirlingTail(cplx w) {
    cplx inv = 1.0 / w, inv2 = inv * inv, pw = inv, sum = 0.0;
    for (int k = 1; k <= kStirlingTerms; ++k) {
        sum += bernoulli(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * pw;
        pw *= inv2;
    }
    return sum;
}

int shiftCount(cplx z) {
    if (std::abs(z) >= kStirlingRadius && z.real() > 0.0) return 0;
    return std::max(0, int(std::ceil(kStirlingRadius - z.real())));
}

void requireOffNegativeAxis(cplx z, const char* who) {
    if (z.imag() == 0.0 && z.real() <= 0.0) throw PoleError(std::string(who) + ": argument on (-inf, 0]");
}

}  // namespace

cplx logGamma(cplx z) {
    requireOffNegativeAxis(z, "logGamma");
    int K = shiftCount(z);
    if (K > 1000000) throw BudgetError("logGamma: shift too large");
    cplx w = z + double(K);
    cplx val = (w - 0.5) * std::log(w) - w + kHalfLog2Pi + stirlingTail(w);
    for (int j = 0; j < K; ++j) val -= std::log(z + double(j));
    return val;
}

cplx digamma(cplx z) {
    requireOffNegativeAxis(z, "digamma");
    int K = shiftCount(z);
    cplx w = z + double(K);
    cplx inv = 1.0 / w, inv2 = inv * inv, pw = inv2, sum = 0.0;
    for (int k = 1; k <= kStirlingTerms; ++k) {
        sum += bernoulli(2 * k) / (2.0 * k) * pw;
        pw *= inv2;
    }
    cplx val = std::log(w) - 0.5 * inv - sum;
    for (int j = 0; j < K; ++j) val -= 1.0 / (z + double(j));
    return val;
}

cplx hurwitzZetaLarge(int s, cplx a) {
    if (s < 2) throw DomainError("hurwitzZetaLarge: s must be >= 2");
    cplx head = 0.0;
    while (std::abs(a) < 20.0 || a.real() < 1.0) {
        head += std::pow(a, -double(s));
        a += 1.0;
    }
    cplx inv = 1.0 / a;
    cplx as = std::pow(a, -double(s));
    cplx val = as * a / double(s - 1) + 0.5 * as;
    // (s)_{2j-1} a^{-s-2j+1} B_2j / (2j)!
    cplx poch = double(s);
    cplx pw = as * inv;
    double fact = 2.0;
    for (int j = 1; j <= 12; ++j) {
        cplx add = bernoulli(2 * j) / fact * poch * pw;
        val += add;
        if (std::abs(add) < 1e-18 * std::abs(val)) break;
        poch *= double(s + 2 * j - 1) * double(s + 2 * j);
        pw *= inv * inv;
        fact *= double(2 * j + 1) * double(2 * j + 2);
    }
    return head + val;
}

cplx binetMu(cplx z) {
    if (!(z.real() > 0.0)) throw DomainError("binetMu: requires Re z > 0");
    return binetMuContinued(z);
}

cplx binetMuContinued(cplx z) {
    requireOffNegativeAxis(z, "binetMu");
    if (std::abs(z) >= kStirlingRadius && std::abs(std::arg(z)) < 0.75 * pi) return stirlingTail(z);
    int K = std::max(0, int(std::ceil(kStirlingRadius - z.real())));
    cplx val = stirlingTail(z + double(K));
    // mu(z) = mu(z+1) + (z + 1/2)(Log(z+1) - Log z) - 1
    for (int j = K - 1; j >= 0; --j) {
        cplx zj = z + double(j);
        cplx dlog = zj.real() > 0.0 ? log1pc(1.0 / zj) : std::log(zj + 1.0) - std::log(zj);
        val += (zj + 0.5) * dlog - 1.0;
    }
    return val;
}

AsymptoticValue binetMuAsymptotic(cplx z, int order) {
    if (order < 1 || order > 25) throw DomainError("binetMuAsymptotic: order out of range");
    if (!(z.real() > 0.0)) throw DomainError("binetMuAsymptotic: requires Re z > 0");
    cplx inv = 1.0 / z, inv2 = inv * inv, pw = inv, sum = 0.0;
    double prev = 0.0;
    for (int m = 1; m <= order; ++m) {
        cplx term = bernoulli(2 * m) / (2.0 * m * (2.0 * m - 1.0)) * pw;
        prev = std::abs(term);
        sum += term;
        pw *= inv2;
    }
    int m = order + 1;
    double next = std::abs(bernoulli(2 * m) / (2.0 * m * (2.0 * m - 1.0)) * pw);
    if (next > prev) throw DivergenceWarning("binetMuAsymptotic: terms no longer decrease");
    return {sum, next};
}

}  // namespace conifold::specfn
