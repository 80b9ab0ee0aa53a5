#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::specfn {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// power series, 0 < x <= 2
void smallX(double x, double& k0, double& k1) {
    const double y = 0.25 * x * x;
    const double lg = std::log(0.5 * x);
    double t0 = 1.0;  // y^k / (k!)^2
    double t1 = 1.0;  // y^k / (k! (k+1)!)
    double i0 = 0.0, i1s = 0.0, s0 = 0.0, s1 = 0.0, hk = 0.0;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            t0 *= y / (double(k) * k);
            t1 *= y / (double(k) * (k + 1));
            hk += 1.0 / k;
        }
        i0 += t0;
        i1s += t1;
        s0 += t0 * hk;
        double psiSum = 2.0 * (-kEulerGamma + hk) + 1.0 / (k + 1);
        s1 += t1 * psiSum;
        if (t0 < 1e-18 * i0 && k > 2) break;
    }
    k0 = -(lg + kEulerGamma) * i0 + s0;
    k1 = 1.0 / x + lg * (0.5 * x * i1s) - 0.25 * x * s1;
}

// Steed/Temme continued fraction for K_0, K_1 at x > 2; returns scaled values
void largeX(double x, double& k0s, double& k1s) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < 10000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-17) break;
    }
    k0s = std::sqrt(pi / (2.0 * x)) / s;
    k1s = k0s * (x + 0.5 - a1 * h) / x;
}

}  // namespace

double besselKScaled(int nu, double x) {
    if (!(x > 0.0)) throw DomainError("besselK: x must be positive");
    if (nu != 0 && nu != 1) throw DomainError("besselK: order must be 0 or 1");
    double k0, k1;
    if (x <= 2.0) {
        smallX(x, k0, k1);
        double e = std::exp(x);
        return (nu == 0 ? k0 : k1) * e;
    }
    largeX(x, k0, k1);
    return nu == 0 ? k0 : k1;
}

double besselK(int nu, double x) {
    double s = besselKScaled(nu, x);
    if (x > 745.0) return 0.0;
    return s * std::exp(-x);
}

}  // namespace conifold::specfn
