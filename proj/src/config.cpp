#include <charconv>
#include <sstream>

#include "conifold/config.hpp"

namespace conifold {

namespace {

// shortest text that reads back to the same double
std::string exact(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string describeDefaults(const Defaults& d) {
    auto cut = [](int v) { return v > 0 ? std::to_string(v) : std::string("auto"); };
    std::ostringstream os;
    os << "R=" << exact(d.R) << "; theta_delta=" << exact(d.thetaDelta) << "; Lambda=" << exact(d.ovLambda.real())
       << (d.ovLambda.imag() < 0 ? "" : "+") << exact(d.ovLambda.imag()) << "i"
       << "; ray_tol=" << exact(d.rayAngleTol) << "; jump_guard=" << exact(d.jumpGuard)
       << "; series_tol=" << exact(d.budget.seriesTol) << "; quad_tol=" << exact(d.budget.quadTol)
       << "; max_terms=" << d.budget.maxTerms << "; n_max=" << cut(d.budget.nMax)
       << "; m_max=" << cut(d.budget.mMax);
    return os.str();
}

}  // namespace conifold
