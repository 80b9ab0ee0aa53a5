#include "conifold/qdilog.hpp"

#include <algorithm>
#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::qdilog {

using specfn::genBernoulliPoly;

namespace {

constexpr double kZeroTol = 1e-14;

bool nearLatticePoint(cplx z, const std::vector<cplx>& w, int range) {
    const double scale = std::max({std::abs(z), std::abs(w[0]), 1.0});
    if (w.size() == 2 || (w.size() == 3 && w[0] == w[1])) {
        cplx a = w[0], b = w.back();
        // solve z = m a + n b over the reals
        double det = a.real() * b.imag() - a.imag() * b.real();
        if (std::abs(det) < 1e-300) return false;
        double m = (z.real() * b.imag() - z.imag() * b.real()) / det;
        double n = (a.real() * z.imag() - a.imag() * z.real()) / det;
        double mr = std::round(m), nr = std::round(n);
        return std::abs(z - (mr * a + nr * b)) < 1e-12 * scale;
    }
    for (int i = -range; i <= range; ++i)
        for (int j = -range; j <= range; ++j)
            for (int k = -range; k <= range; ++k)
                if (std::abs(z - (double(i) * w[0] + double(j) * w[1] + double(k) * w[2])) < 1e-12 * scale)
                    return true;
    return false;
}

// The periods must sit in a common open half-plane; then every residue
// family runs over k >= 1.
void requireHalfPlane(const std::vector<cplx>& w) {
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j) {
            cplx r = w[i] / w[j];
            if (r.imag() == 0.0 && r.real() < 0.0)
                throw DomainError("multiple sine: periods with negative real ratio");
        }
    // with pairwise non-opposite directions the largest angular gap decides
    std::vector<double> args;
    for (cplx x : w) args.push_back(std::arg(x));
    std::sort(args.begin(), args.end());
    double maxGap = args.front() + twoPi - args.back();
    for (size_t i = 1; i < args.size(); ++i) maxGap = std::max(maxGap, args[i] - args[i - 1]);
    if (maxGap <= pi) throw DomainError("multiple sine: periods not in a common half-plane");
}

struct Family {
    cplx omega;
    int multiplicity;
};

std::vector<Family> groupPeriods(const std::vector<cplx>& w) {
    std::vector<Family> out;
    for (cplx x : w) {
        bool merged = false;
        for (auto& f : out)
            if (std::abs(f.omega - x) <= 1e-15 * std::abs(x)) {
                ++f.multiplicity;
                merged = true;
            }
        if (!merged) out.push_back({x, 1});
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j)
            if (i != j && std::abs((out[i].omega / out[j].omega).imag()) < 1e-12)
                throw DomainError("multiple sine: distinct periods with real ratio");
    return out;
}

// -2 pi i * (sum of residues of e^{zx} / (x prod (e^{w x} - 1)) above the real
// contour), i.e. minus the contour integral over R + i0 for r = 3.
cplx residueSeries3(cplx z, const std::vector<cplx>& w, int maxTerms) {
    auto fam = groupPeriods(w);
    if (fam.size() == 1) throw DomainError("multiple sine: three equal periods not supported");
    cplx total = 0.0;
    for (size_t j = 0; j < fam.size(); ++j) {
        const cplx a = fam[j].omega;
        // periods other than this family, with multiplicity; "bad" ones grow along the family
        std::vector<cplx> others;
        for (size_t i = 0; i < fam.size(); ++i)
            if (i != j)
                for (int m = 0; m < fam[i].multiplicity; ++m) others.push_back(fam[i].omega);
        cplx shift = 0.0;
        std::vector<bool> bad(others.size());
        for (size_t i = 0; i < others.size(); ++i) {
            bad[i] = (others[i] / a).imag() < 0.0;
            if (bad[i]) shift += others[i];
        }
        const double rate = twoPi * ((z - shift) / a).imag();
        if (!(rate > 1e-3)) throw DomainError("multiple sine: argument outside the residue-series strip");
        cplx sum = 0.0;
        int quiet = 0;
        for (int k = 1;; ++k) {
            if (k > maxTerms) throw BudgetError("multiple sine: residue series budget exhausted");
            const cplx x = twoPi * I * double(k) / a;
            cplx term;
            if (fam[j].multiplicity == 1) {
                cplx den = x * a;
                for (size_t i = 0; i < others.size(); ++i) {
                    cplx e = std::exp((bad[i] ? -1.0 : 1.0) * others[i] * x);
                    den *= bad[i] ? (1.0 - e) : (e - 1.0);
                }
                term = std::exp((z - shift) * x) / den;
            } else {
                // double pole: h/a^2 (z - 1/x - b Q/(Q-1) - a), h = e^{zx}/(x(Q-1)), Q = e^{bx}
                const cplx b = others.at(0);
                cplx h, qRatio;
                if (bad[0]) {
                    cplx qi = std::exp(-b * x);
                    h = std::exp((z - b) * x) / (x * (1.0 - qi));
                    qRatio = 1.0 / (1.0 - qi);
                } else {
                    cplx qv = std::exp(b * x);
                    h = std::exp(z * x) / (x * (qv - 1.0));
                    qRatio = qv / (qv - 1.0);
                }
                term = h / (a * a) * (z - 1.0 / x - b * qRatio - a);
            }
            sum += term;
            if (std::abs(term) < 1e-18 * std::max(std::abs(sum), 1e-300)) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        total += sum;
    }
    return -twoPi * I * total;
}

}  // namespace

cplx logQuantumDilogH(cplx t, OmegaPair w, int maxTerms) {
    cplx w1 = w.omega1, w2 = w.omega2;
    if (w1 == 0.0 || w2 == 0.0) throw DomainError("H: zero period");
    cplx ratio = w1 / w2;
    // |q| = 1 within rounding: the products do not converge
    if (std::abs(ratio.imag()) < 1e-12 * std::abs(ratio))
        throw DomainError(ratio.real() < 0 ? "H: w1/w2 negative real" : "H: product form needs non-real w1/w2");
    if (ratio.imag() < 0.0) std::swap(w1, w2);
    const cplx tau = w1 / w2;
    const cplx q = std::exp(twoPi * I * tau);
    const cplx qt = std::exp(-twoPi * I / tau);
    const cplx x = std::exp(twoPi * I * t / w2);
    const cplx xt = std::exp(twoPi * I * t / w1);
    const cplx xq = xt * qt;

    const double rSeries = std::max(std::abs(x), std::abs(xq));
    if (rSeries < 0.98) {
        // -sum x^k/(k(1-q^k)) + sum (xt qt)^k/(k(1-qt^k))
        cplx sum = 0.0, xk = 1.0, yk = 1.0, qk = 1.0, qtk = 1.0;
        for (int k = 1;; ++k) {
            if (k > maxTerms) throw BudgetError("H: series budget exhausted");
            xk *= x;
            yk *= xq;
            qk *= q;
            qtk *= qt;
            cplx term = -xk / (double(k) * (1.0 - qk)) + yk / (double(k) * (1.0 - qtk));
            sum += term;
            if (std::abs(xk) + std::abs(yk) < 1e-19 * std::max(1.0, std::abs(sum)) * k) break;
        }
        return sum;
    }
    // products (x; q)_inf / (xt qt; qt)_inf
    cplx sum = 0.0;
    cplx f = x;
    for (int j = 0;; ++j) {
        if (j > maxTerms) throw BudgetError("H: product budget exhausted");
        cplx one = 1.0 - f;
        if (std::abs(one) < kZeroTol) throw PoleError("H: zero lattice point");
        sum += specfn::log1pc(-f);
        if (std::abs(f) < 1e-19 && j > 2) break;
        f *= q;
    }
    f = xq;
    for (int j = 0;; ++j) {
        if (j > maxTerms) throw BudgetError("H: product budget exhausted");
        cplx one = 1.0 - f;
        if (std::abs(one) < kZeroTol) throw PoleError("H: pole lattice point");
        sum -= specfn::log1pc(-f);
        if (std::abs(f) < 1e-19 && j > 2) break;
        f *= qt;
    }
    return sum;
}

cplx quantumDilogH(cplx t, OmegaPair w, int maxTerms) { return std::exp(logQuantumDilogH(t, w, maxTerms)); }

cplx logMultipleSine(int r, cplx z, const std::vector<cplx>& omegas, int maxTerms) {
    if (int(omegas.size()) != r) throw DomainError("multiple sine: need r periods");
    for (cplx w : omegas)
        if (w == 0.0) throw DomainError("multiple sine: zero period");
    if (r == 2) {
        return 0.5 * pi * I * genBernoulliPoly(2, 2, z, omegas) +
               logQuantumDilogH(z, {omegas[0], omegas[1]}, maxTerms);
    }
    if (r == 3) {
        requireHalfPlane(omegas);
        if (nearLatticePoint(z, omegas, 8)) throw PoleError("multiple sine: lattice point");
        return -(pi / 6.0) * I * genBernoulliPoly(3, 3, z, omegas) + residueSeries3(z, omegas, maxTerms);
    }
    throw DomainError("multiple sine: order must be 2 or 3");
}

cplx multipleSine(int r, cplx z, const std::vector<cplx>& omegas, int maxTerms) {
    return std::exp(logMultipleSine(r, z, omegas, maxTerms));
}

cplx qCorrection(cplx t, cplx omega1, cplx omega2, QConstant c) {
    if (omega1 == 0.0 || omega2 == 0.0) throw DomainError("qCorrection: zero period");
    const cplx x = std::exp(twoPi * I * t / omega1);
    if (x.imag() == 0.0 && x.real() >= 1.0) throw BranchCutError("qCorrection: e^{2 pi i t/w1} on [1, inf)");
    const cplx dilog = specfn::li2(x);
    const cplx logTerm = specfn::log1pc(-x);
    const cplx constant = (c == QConstant::Imaginary ? I : cplx(1.0)) * (pi / 12.0) * (omega2 / omega1);
    return -(omega1 / (twoPi * I * omega2)) * dilog - 0.5 * logTerm + constant;
}

cplx logTripleG3(cplx z, cplx omega1, cplx omega2, int maxTerms) {
    std::vector<cplx> w{omega1, omega1, omega2};
    requireHalfPlane(w);
    const cplx u = z + omega1;
    if (nearLatticePoint(u, w, 8)) throw PoleError("G3: lattice point");
    // the B_{3,3} prefactors of G3 and sin_3 cancel
    return residueSeries3(u, w, maxTerms);
}

cplx tripleG3(cplx z, cplx omega1, cplx omega2, int maxTerms) {
    return std::exp(logTripleG3(z, omega1, omega2, maxTerms));
}

cplx fNonPert(cplx lambda, cplx t) {
    if (lambda == 0.0) throw DomainError("fNonPert: lambda = 0");
    const cplx lc = lambda / twoPi;
    return logTripleG3(t - lc, lc, 1.0);
}

std::vector<cplx> fNonPertPath(cplx lambda, const std::vector<cplx>& path) {
    std::vector<cplx> out;
    out.reserve(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
        cplx v = fNonPert(lambda, path[i]);
        if (v.real() < -600.0) throw BranchTrackError("fNonPert: path passes through a zero");
        if (i > 0) {
            double jump = v.imag() - out.back().imag();
            double wraps = std::round(jump / twoPi);
            v -= twoPi * I * wraps;
            if (std::abs(v.imag() - out.back().imag()) > 1.0)
                throw BranchTrackError("fNonPert: path step too coarse to follow the branch");
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace conifold::qdilog
