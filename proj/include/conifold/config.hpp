#pragma once

#include <complex>
#include <numbers>
#include <string>

namespace conifold {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr double twoPi = 2.0 * std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Kernels with an OpenMP version keep the serial loop as a reference.
enum class Exec { Serial, Parallel };

struct TruncationBudget {
    double seriesTol = 1e-15;
    double quadTol = 1e-12;
    int maxTerms = 2000000;
    int quadMaxDepth = 60;
    // lattice cut for the n-sum over beta + n delta; 0 means "choose from |t|"
    int nMax = 0;
    // Fourier cut for the m-sum; 0 means "choose from |t - n|"
    int mMax = 0;
};

// Every default that changes a number lives here and is echoed in reports.
struct Defaults {
    double R = 1.0;                 // GMN scale
    double thetaDelta = 0.0;        // flavor angle
    cplx ovLambda{0.0, 1.0 / twoPi};
    double rayAngleTol = 1e-12;     // radians
    double jumpGuard = 1e-6;        // radians
    double wallTol = 1e-12;
    double degenerateTol = 1e-10;
    TruncationBudget budget{};
};

inline const Defaults& defaults() {
    static const Defaults d{};
    return d;
}

std::string describeDefaults(const Defaults& d);

}  // namespace conifold
