#include <vector>

#include "conifold/specfn.hpp"

namespace conifold::specfn {

namespace {

using Series = std::vector<cplx>;

Series multiply(const Series& a, const Series& b) {
    Series c(a.size(), 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Series reciprocal(const Series& f) {
    Series g(f.size(), 0.0);
    g[0] = 1.0 / f[0];
    for (size_t k = 1; k < f.size(); ++k) {
        cplx s = 0.0;
        for (size_t j = 1; j <= k; ++j) s += f[j] * g[k - j];
        g[k] = -s * g[0];
    }
    return g;
}

}  // namespace

cplx genBernoulliPoly(int r, int n, cplx z, const std::vector<cplx>& omegas) {
    if (r < 1 || int(omegas.size()) != r) throw DomainError("genBernoulliPoly: need r omegas");
    if (n < 0 || n > 30) throw DomainError("genBernoulliPoly: order out of range");
    for (cplx w : omegas)
        if (w == 0.0) throw DomainError("genBernoulliPoly: omega must be nonzero");
    const size_t len = size_t(n) + 1;

    Series acc(len, 0.0);
    // e^{zx}
    cplx term = 1.0;
    for (size_t k = 0; k < len; ++k) {
        acc[k] = term;
        term *= z / double(k + 1);
    }
    for (cplx w : omegas) {
        // (e^{wx} - 1)/x = sum w^{k+1} x^k / (k+1)!
        Series f(len);
        cplx c = w;
        for (size_t k = 0; k < len; ++k) {
            f[k] = c;
            c *= w / double(k + 2);
        }
        acc = multiply(acc, reciprocal(f));
    }
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return acc[size_t(n)] * fact;
}

}  // namespace conifold::specfn
