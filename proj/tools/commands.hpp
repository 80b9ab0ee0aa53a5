#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "conifold/config.hpp"
#include "conifold/qdilog.hpp"

namespace cli {

using conifold::cplx;

enum class Format { Csv, Json };

struct GridSpec {
    double x0, x1, y0, y1;
    int nx, ny;
};

struct RunConfig {
    std::optional<cplx> t, lambda, omega1, omega2;
    std::optional<GridSpec> grid;  // over t, x fastest
    double thetaBeta = 0.0, thetaBetaVee = 0.0, thetaDelta = 0.0;
    conifold::Defaults defaults = conifold::defaults();
    Format format = Format::Csv;
    std::string out;  // empty: stdout
    unsigned long long seed = 20240517;
    int steps = 4;   // ov-compare sequence length
    int sweep = 0;   // conjecture: angles on |lambda| = const
    double tol = 1e-6;
    std::vector<int> criteria;  // verify-all subset, empty = all
    conifold::qdilog::QConstant qConstant = conifold::qdilog::QConstant::Imaginary;
};

// "a+bi", "a-bi", "bi", "a" or "a,b"
cplx parseComplex(const std::string& s);
// "x0:x1:nx,y0:y1:ny"
GridSpec parseGrid(const std::string& s);
// overrides from a JSON file: R, theta_delta, series_tol, quad_tol, max_terms, n_max, m_max
void applyConfigFile(const std::string& path, conifold::Defaults& d);

using Cell = std::variant<double, long, bool, std::string>;

struct Table {
    std::string command;
    std::vector<std::pair<std::string, std::string>> columns;  // name, unit
    std::vector<std::vector<Cell>> rows;
    void addColumn(const std::string& name, const std::string& unit = "1");
    void addComplexColumn(const std::string& name, const std::string& unit = "1");
};
void pushComplex(std::vector<Cell>& row, cplx z);

void writeTable(const Table& t, const RunConfig& c, std::ostream& os);

// Exit codes: 0 pass, 1 verification failure, 2 input/domain error, 3 budget exhaustion.
int cmdPeriods(const RunConfig& c, Table& out);
int cmdMetric(const RunConfig& c, Table& out);
int cmdOvCompare(const RunConfig& c, Table& out);
int cmdTwistorCheck(const RunConfig& c, Table& out);
int cmdConformal(const RunConfig& c, Table& out);
int cmdConjecture(const RunConfig& c, Table& out);
int cmdQdilog(const RunConfig& c, Table& out);
int cmdVerifyAll(const RunConfig& c, Table& out);

}  // namespace cli
