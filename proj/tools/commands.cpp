#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "acceptance_suite.hpp"
#include "conifold/ask.hpp"
#include "conifold/bps.hpp"
#include "conifold/conformal.hpp"
#include "conifold/conjecture.hpp"
#include "conifold/hk.hpp"
#include "conifold/qdilog.hpp"
#include "conifold/twistor.hpp"
#include "json.hpp"

namespace cli {

using namespace conifold;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "conifold-cli/1";

double toDouble(const std::string& s) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw DomainError("bad number: " + s);
    return v;
}

std::vector<cplx> tPoints(const RunConfig& c) {
    if (c.grid) {
        const GridSpec& g = *c.grid;
        std::vector<cplx> pts;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double x = g.nx == 1 ? g.x0 : g.x0 + (g.x1 - g.x0) * i / (g.nx - 1);
                const double y = g.ny == 1 ? g.y0 : g.y0 + (g.y1 - g.y0) * j / (g.ny - 1);
                pts.push_back({x, y});
            }
        return pts;
    }
    if (!c.t) throw DomainError("--t or --grid is required");
    return {*c.t};
}

hk::HkOptions hkOptions(const RunConfig& c) {
    hk::HkOptions o;
    o.budget = c.defaults.budget;
    o.R = c.defaults.R;
    return o;
}

std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csvField(const Cell& cell) {
    struct V {
        std::string operator()(double v) const { return fmt17(v); }
        std::string operator()(long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        }
    };
    return std::visit(V{}, cell);
}

json jsonField(const Cell& cell) {
    return std::visit([](const auto& v) -> json { return v; }, cell);
}

}  // namespace

cplx parseComplex(const std::string& in) {
    std::string s;
    for (char ch : in)
        if (ch != ' ') s += ch;
    if (s.empty()) throw DomainError("empty complex literal");
    if (auto comma = s.find(','); comma != std::string::npos)
        return {toDouble(s.substr(0, comma)), toDouble(s.substr(comma + 1))};
    if (s.back() != 'i') return {toDouble(s), 0.0};
    s.pop_back();
    // split at the last sign that is not an exponent sign
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag = [](const std::string& p) {
        if (p.empty() || p == "+") return 1.0;
        if (p == "-") return -1.0;
        return toDouble(p);
    };
    if (split == std::string::npos) return {0.0, imag(s)};
    return {toDouble(s.substr(0, split)), imag(s.substr(split))};
}

GridSpec parseGrid(const std::string& s) {
    GridSpec g{};
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d,%lf:%lf:%d%c", &g.x0, &g.x1, &g.nx, &g.y0, &g.y1, &g.ny, &tail) != 6 ||
        g.nx < 1 || g.ny < 1)
        throw DomainError("grid must read x0:x1:nx,y0:y1:ny");
    return g;
}

void applyConfigFile(const std::string& path, Defaults& d) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot read config " + path);
    json j = json::parse(f, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw DomainError("config is not a JSON object: " + path);
    for (auto& [k, v] : j.items()) {
        if (k == "R") d.R = v.get<double>();
        else if (k == "theta_delta") d.thetaDelta = v.get<double>();
        else if (k == "series_tol") d.budget.seriesTol = v.get<double>();
        else if (k == "quad_tol") d.budget.quadTol = v.get<double>();
        else if (k == "max_terms") d.budget.maxTerms = v.get<int>();
        else if (k == "n_max") d.budget.nMax = v.get<int>();
        else if (k == "m_max") d.budget.mMax = v.get<int>();
        else throw DomainError("unknown config key " + k);
    }
}

void Table::addColumn(const std::string& name, const std::string& unit) { columns.push_back({name, unit}); }
void Table::addComplexColumn(const std::string& name, const std::string& unit) {
    addColumn(name + "_re", unit);
    addColumn(name + "_im", unit);
}
void pushComplex(std::vector<Cell>& row, cplx z) {
    row.push_back(z.real());
    row.push_back(z.imag());
}

void writeTable(const Table& t, const RunConfig& c, std::ostream& os) {
    if (c.format == Format::Json) {
        json j;
        j["schema"] = kSchema;
        j["command"] = t.command;
        j["defaults"] = describeDefaults(c.defaults);
        json cols = json::array();
        for (const auto& [n, u] : t.columns) cols.push_back({{"name", n}, {"unit", u}});
        j["columns"] = cols;
        json rows = json::array();
        for (const auto& r : t.rows) {
            json row = json::array();
            for (const auto& cell : r) row.push_back(jsonField(cell));
            rows.push_back(row);
        }
        j["rows"] = rows;
        os << j.dump(1) << "\n";
        return;
    }
    os << "# schema: " << kSchema << "\n# command: " << t.command << "\n# defaults: " << describeDefaults(c.defaults)
       << "\n";
    for (size_t k = 0; k < t.columns.size(); ++k)
        os << (k ? "," : "") << t.columns[k].first << "[" << t.columns[k].second << "]";
    os << "\n";
    for (const auto& r : t.rows) {
        for (size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csvField(r[k]);
        os << "\n";
    }
}

int cmdPeriods(const RunConfig& c, Table& out) {
    out.command = "periods";
    out.addComplexColumn("t");
    for (int i = 0; i < 4; ++i) out.addComplexColumn("w" + std::to_string(i));
    out.addColumn("pf_residual");
    for (cplx t : tPoints(c)) {
        if (!bps::inM0(t, c.defaults.wallTol)) throw DomainError("t outside M0");
        ask::PeriodVector w = ask::periods(t);
        std::vector<Cell> row;
        pushComplex(row, t);
        for (int i = 0; i < 4; ++i) pushComplex(row, w[i]);
        row.push_back(ask::pfResidual(t));
        out.rows.push_back(row);
    }
    return 0;
}

int cmdMetric(const RunConfig& c, Table& out) {
    out.command = "metric";
    out.addComplexColumn("t");
    out.addColumn("theta_bv", "rad");
    out.addColumn("theta_b", "rad");
    out.addColumn("region");
    out.addColumn("ok");
    out.addColumn("N");
    out.addColumn("positive_definite");
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) out.addColumn("g" + std::to_string(i) + std::to_string(j));
    out.addColumn("tail_bound");
    out.addColumn("error");
    std::vector<hk::FiberPoint> pts;
    for (cplx t : tPoints(c)) pts.push_back({t, c.thetaBetaVee, c.thetaBeta, c.thetaDelta});
    const auto rows = hk::metricScan(pts, hkOptions(c), hk::Exec::Parallel);
    for (const auto& r : rows) {
        if (r.error.find("budget") != std::string::npos) throw BudgetError(r.error);
        std::vector<Cell> row;
        pushComplex(row, r.p.t);
        row.push_back(r.p.thetaBetaVee);
        row.push_back(r.p.thetaBeta);
        row.push_back(std::string(ask::regionName(ask::regionClassify(r.p.t, c.defaults.wallTol))));
        row.push_back(r.ok);
        row.push_back(r.ok ? r.metric.N : NAN);
        row.push_back(r.ok && r.positiveDefinite);
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) row.push_back(r.ok ? r.metric.g(i, j) : NAN);
        row.push_back(r.ok ? r.metric.tailBound : NAN);
        row.push_back(r.error);
        out.rows.push_back(row);
    }
    return 0;
}

int cmdOvCompare(const RunConfig& c, Table& out) {
    out.command = "ov-compare";
    out.addColumn("k");
    out.addComplexColumn("t");
    out.addColumn("eta1_max");
    out.addColumn("eta2_max");
    out.addColumn("eta3_max");
    out.addComplexColumn("eta2_dt_dtheta_b");
    out.addComplexColumn("eta3_dt_dtbar");
    out.addColumn("eta2_limit");
    out.addColumn("eta3_limit_im");
    const hk::HkOptions o = hkOptions(c);
    for (int k = 1; k <= c.steps; ++k) {
        const hk::FiberPoint p{std::polar(std::pow(10.0, -k), pi / 4.0), c.thetaBetaVee, c.thetaBeta, c.thetaDelta};
        const hk::SmoothingEta e = hk::smoothingEta(p, o);
        const double sp = hk::sPrimeAtZero(p, o).value;
        std::vector<Cell> row{long(k)};
        pushComplex(row, p.t);
        row.push_back(e.eta1.cwiseAbs().maxCoeff());
        row.push_back(e.eta2.cwiseAbs().maxCoeff());
        row.push_back(e.eta3.cwiseAbs().maxCoeff());
        pushComplex(row, e.eta2(hk::kDt, hk::kDThetaB));
        pushComplex(row, e.eta3(hk::kDt, hk::kDtBar));
        row.push_back(-sp / twoPi);
        row.push_back(0.5 * sp);
        out.rows.push_back(row);
    }
    return 0;
}

int cmdTwistorCheck(const RunConfig& c, Table& out) {
    out.command = "twistor-check";
    out.addComplexColumn("t");
    out.addColumn("theta_bv", "rad");
    out.addColumn("theta_b", "rad");
    out.addColumn("omega3_rel_error");
    out.addColumn("pass");
    constexpr double tol = 1e-4;
    twistor::TwistorOptions o;
    o.hk = hkOptions(c);
    int status = 0;
    for (cplx t : tPoints(c)) {
        const hk::FiberPoint p{t, c.thetaBetaVee, c.thetaBeta, c.thetaDelta};
        const hk::TwoForm k = hk::kahlerForms(p, o.hk).omega3;
        const double err = (twistor::omega3FromTwistor(p, o) - k).cwiseAbs().maxCoeff() / k.cwiseAbs().maxCoeff();
        std::vector<Cell> row;
        pushComplex(row, t);
        row.push_back(p.thetaBetaVee);
        row.push_back(p.thetaBeta);
        row.push_back(err);
        row.push_back(err < tol);
        if (!(err < tol)) status = 1;
        out.rows.push_back(row);
    }
    return status;
}

int cmdConformal(const RunConfig& c, Table& out) {
    out.command = "conformal";
    if (!c.lambda) throw DomainError("--lambda is required");
    out.addComplexColumn("t");
    out.addComplexColumn("lambda");
    out.addComplexColumn("x_beta_vee");
    out.addComplexColumn("log_x_inst");
    out.addColumn("tail_bound");
    out.addColumn("explicit_pairs");
    out.addColumn("block_M");
    for (cplx t : tPoints(c)) {
        const auto ctx = conformal::makeContext(t, *c.lambda, c.defaults.budget);
        const auto s = conformal::logXInstBetaVee(ctx, c.defaults.budget);
        std::vector<Cell> row;
        pushComplex(row, t);
        pushComplex(row, *c.lambda);
        pushComplex(row, conformal::conformalXBetaVee(t, *c.lambda, c.defaults.budget));
        pushComplex(row, s.value);
        row.push_back(s.tailBound);
        row.push_back(long(s.pairs));
        row.push_back(long(ctx.M));
        out.rows.push_back(row);
    }
    return 0;
}

int cmdConjecture(const RunConfig& c, Table& out) {
    out.command = "conjecture";
    std::vector<std::pair<cplx, cplx>> pts;
    if (c.t && c.lambda) {
        const int n = std::max(c.sweep, 1);
        for (int j = 0; j < n; ++j) pts.push_back({*c.t, *c.lambda * std::polar(1.0, twoPi * j / n)});
    } else if (c.t || c.lambda) {
        throw DomainError("--t and --lambda go together");
    } else {
        // seeded panel inside the sector (l_0, l_-1)
        std::mt19937_64 gen(c.seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 10; ++i) {
            const cplx t(-0.4 + 0.8 * u(gen), 0.4 + 0.6 * u(gen));
            const double a0 = bps::rayAngle(t, 0, 1), am1 = bps::rayAngle(t, -1, 1);
            const double r = 0.3 + 1.2 * u(gen);
            pts.push_back({t, std::polar(r, a0 + (0.15 + 0.7 * u(gen)) * (am1 - a0))});
        }
    }
    out.addComplexColumn("t");
    out.addComplexColumn("lambda");
    out.addColumn("ok");
    out.addColumn("residual");
    out.addColumn("pass");
    out.addColumn("error");
    const auto rows = conjecture::residualPanel(pts, hk::Exec::Parallel, c.defaults.budget, c.qConstant);
    int status = 0;
    for (const auto& r : rows) {
        if (r.error.find("budget") != std::string::npos) throw BudgetError(r.error);
        const bool pass = r.ok && r.residual < c.tol;
        if (r.ok && !pass) status = 1;
        std::vector<Cell> row;
        pushComplex(row, r.t);
        pushComplex(row, r.lambda);
        row.push_back(r.ok);
        row.push_back(r.ok ? r.residual : NAN);
        row.push_back(pass);
        row.push_back(r.error);
        out.rows.push_back(row);
    }
    return status;
}

int cmdQdilog(const RunConfig& c, Table& out) {
    out.command = "qdilog";
    const cplx w1 = c.omega1.value_or(1.0);
    const cplx w2 = c.omega2 ? *c.omega2 : c.lambda ? -*c.lambda : I;
    out.addComplexColumn("t");
    out.addComplexColumn("omega1");
    out.addComplexColumn("omega2");
    out.addComplexColumn("H");
    out.addComplexColumn("log_H");
    out.addComplexColumn("Q_H");
    for (cplx t : tPoints(c)) {
        const cplx lh = qdilog::logQuantumDilogH(t, {w1, w2}, c.defaults.budget.maxTerms);
        std::vector<Cell> row;
        pushComplex(row, t);
        pushComplex(row, w1);
        pushComplex(row, w2);
        pushComplex(row, std::exp(lh));
        pushComplex(row, lh);
        pushComplex(row, qdilog::qCorrection(t, w1, w2, c.qConstant));
        out.rows.push_back(row);
    }
    return 0;
}

int cmdVerifyAll(const RunConfig& c, Table& out) {
    out.command = "verify-all";
    out.addColumn("criterion");
    out.addColumn("suite");
    out.addColumn("case");
    out.addColumn("measured");
    out.addColumn("comparison");
    out.addColumn("tolerance");
    out.addColumn("pass");
    acceptance::SuiteOptions so;
    so.seed = c.seed;
    so.qConstant = c.qConstant;
    std::vector<int> ids = c.criteria;
    if (ids.empty())
        for (int i = 1; i <= acceptance::kCriteria; ++i) ids.push_back(i);
    bool all = true;
    for (int id : ids) {
        const acceptance::CriterionResult r = acceptance::runCriterion(id, so);
        for (const auto& cs : r.cases)
            out.rows.push_back({long(id), r.title, cs.name, cs.measured, cs.cmp, cs.tolerance, cs.pass});
        all = all && r.pass();
    }
    return all ? 0 : 1;
}

}  // namespace cli
