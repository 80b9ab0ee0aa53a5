#pragma once

#include <array>

#include "conifold/config.hpp"
#include "conifold/errors.hpp"

namespace conifold::ask {

struct PeriodVector {
    cplx w0, w1, w2, w3;
    cplx operator[](int i) const { return i == 0 ? w0 : i == 1 ? w1 : i == 2 ? w2 : w3; }
};

// Requires t in M0.
PeriodVector periods(cplx t);
// Same formulas with log z := 2 pi i t for any t whose q = e^{2 pi i t} is off [1, inf);
// used to follow the periods once around z = 0.
PeriodVector periodsContinued(cplx t);

cplx prepotentialF0(cplx t);
cplx tau(cplx t);
double imTau(cplx t);

enum class Region { MPlus, MMinus, Wall, OutsideStrip };
const char* regionName(Region r);
// Geometric description of the wall |1 - q| = |q|; independent of imTau.
Region regionClassify(cplx t, double wallTol = 1e-12);

using Matrix4 = std::array<std::array<double, 4>, 4>;
Matrix4 monodromyMatrixZ0();

// max_i |L w^i| with L = theta^2 (1 - z) theta^2, by exact theta-calculus
double pfResidual(cplx t);

double askMetricCoefficient(cplx t);

}  // namespace conifold::ask
