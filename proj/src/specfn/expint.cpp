#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::specfn {

double expIntE1(double x) {
    if (!(x > 0.0)) throw DomainError("expIntE1: x must be positive");
    if (x <= 1.0) {
        constexpr double gammaE = 0.57721566490153286061;
        double sum = 0.0, term = 1.0;
        for (int n = 1; n < 100; ++n) {
            term *= -x / n;
            double add = -term / n;
            sum += add;
            if (std::abs(add) < 1e-18) break;
        }
        return -gammaE - std::log(x) + sum;
    }
    // modified Lentz on the continued fraction e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double a = -double(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-x);
    }
    throw BudgetError("expIntE1: continued fraction did not converge");
}

}  // namespace conifold::specfn
