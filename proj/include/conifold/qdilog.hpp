#pragma once

#include <vector>

#include "conifold/config.hpp"
#include "conifold/errors.hpp"

// Barnes multiple sines, the quantum dilogarithm H, its correction term
// and the triple gamma function. Kept in its own link unit: the
// conformal-limit sums must not depend on anything declared here.
namespace conifold::qdilog {

struct OmegaPair {
    cplx omega1;
    cplx omega2;
};

// sin_2 from the q-Pochhammer factorization; sin_3 from its residue
// series (exact double poles when two periods coincide).
cplx multipleSine(int r, cplx z, const std::vector<cplx>& omegas, int maxTerms = 2000000);
cplx logMultipleSine(int r, cplx z, const std::vector<cplx>& omegas, int maxTerms = 2000000);

// A logarithm of H. Inside the convergence strip of the Lambert-type
// series it is the analytic one; elsewhere a sum of principal logs.
cplx logQuantumDilogH(cplx t, OmegaPair w, int maxTerms = 2000000);
cplx quantumDilogH(cplx t, OmegaPair w, int maxTerms = 2000000);

enum class QConstant {
    Imaginary,  // (pi i / 12)(w2/w1): the value the conjecture check supports
    AsPrinted   // (pi / 12)(w2/w1): kept for the mutation test
};
cplx qCorrection(cplx t, cplx omega1, cplx omega2, QConstant c = QConstant::Imaginary);

cplx logTripleG3(cplx z, cplx omega1, cplx omega2, int maxTerms = 2000000);
cplx tripleG3(cplx z, cplx omega1, cplx omega2, int maxTerms = 2000000);

// log G3(t - lc | lc, 1) with lc = lambda / 2 pi, the normalisation in which
// F(lambda, t + lc) - F(lambda, t) = -log H(t | lc, 1).
cplx fNonPert(cplx lambda, cplx t);
// Same along a path of t values, with the branch of log continued sample by sample.
std::vector<cplx> fNonPertPath(cplx lambda, const std::vector<cplx>& path);

}  // namespace conifold::qdilog
