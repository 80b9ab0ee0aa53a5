#include <array>
#include <cmath>

#include "conifold/specfn.hpp"

namespace conifold::specfn {

namespace {
constexpr std::array<double, 31> kEven = {
    1.0,
    0.16666666666666666,
    -0.03333333333333333,
    0.023809523809523808,
    -0.03333333333333333,
    0.07575757575757576,
    -0.2531135531135531,
    1.1666666666666667,
    -7.092156862745098,
    54.971177944862156,
    -529.1242424242424,
    6192.123188405797,
    -86580.25311355312,
    1425517.1666666667,
    -27298231.067816094,
    601580873.9006424,
    -15116315767.092157,
    429614643061.1667,
    -13711655205088.332,
    488332318973593.2,
    -1.9296579341940068e+16,
    8.416930475736826e+17,
    -4.0338071854059454e+19,
    2.1150748638081993e+21,
    -1.2086626522296526e+23,
    7.500866746076964e+24,
    -5.038778101481069e+26,
    3.6528776484818122e+28,
    -2.849876930245088e+30,
    2.3865427499683627e+32,
    -2.1399949257225335e+34,
};
}  // namespace

double bernoulli(int n) {
    if (n < 0 || n > 60) throw DomainError("bernoulli: index out of table");
    if (n == 1) return -0.5;
    if (n % 2 == 1) return 0.0;
    return kEven[n / 2];
}

double zetaInt(int s) {
    if (s == 1) throw PoleError("zeta(1)");
    if (s == 3) return 1.2020569031595942854;
    if (s == 2) return pi * pi / 6.0;
    if (s == 0) return -0.5;
    // zeta(-k) = (-1)^k B_{k+1} / (k+1); zero for even k > 0
    int k = -s;
    if (k + 1 > 60) throw DomainError("zetaInt: index out of table");
    double b = bernoulli(k + 1);
    return ((k % 2) ? -1.0 : 1.0) * b / (k + 1);
}

}  // namespace conifold::specfn
