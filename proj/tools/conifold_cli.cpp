#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "conifold/errors.hpp"

namespace {

struct RawOptions {
    std::string t, lambda, omega1, omega2, grid, format = "csv", out, config, qConstant = "imaginary";
    double thetaBeta = 0.0, thetaBetaVee = 0.0, thetaDelta = 0.0;
    double seriesTol = 0.0, quadTol = 0.0;
    int maxTerms = 0, nMax = -1, mMax = -1;
    unsigned long long seed = 20240517;
    int steps = 4, sweep = 0;
    double tol = 1e-6;
    std::vector<int> criteria;
};

void addCommon(CLI::App* sub, RawOptions& r) {
    sub->add_option("--t", r.t, "modulus t, e.g. 0.1+0.05i or 0.1,0.05");
    sub->add_option("--lambda", r.lambda, "conformal-limit parameter lambda");
    sub->add_option("--grid", r.grid, "t grid x0:x1:nx,y0:y1:ny (x fastest)");
    sub->add_option("--theta-beta", r.thetaBeta, "fiber angle theta_beta");
    sub->add_option("--theta-beta-vee", r.thetaBetaVee, "fiber angle theta_beta_vee");
    sub->add_option("--theta-delta", r.thetaDelta, "flavor angle theta_delta");
    sub->add_option("--budget-series-tol", r.seriesTol, "series tolerance");
    sub->add_option("--budget-quad-tol", r.quadTol, "quadrature tolerance");
    sub->add_option("--budget-max-terms", r.maxTerms, "term budget");
    sub->add_option("--budget-n-max", r.nMax, "lattice cut for beta + n delta (0 = auto)");
    sub->add_option("--budget-m-max", r.mMax, "Fourier cut (0 = auto)");
    sub->add_option("--format", r.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", r.out, "output file (default stdout)");
    sub->add_option("--seed", r.seed, "seed for randomized panels");
    sub->add_option("--config", r.config, "JSON config file (default $CONIFOLD_CONFIG)");
}

cli::RunConfig resolve(const RawOptions& r) {
    cli::RunConfig c;
    std::string cfg = r.config;
    if (cfg.empty())
        if (const char* env = std::getenv("CONIFOLD_CONFIG")) cfg = env;
    if (!cfg.empty()) cli::applyConfigFile(cfg, c.defaults);
    if (!r.t.empty()) c.t = cli::parseComplex(r.t);
    if (!r.lambda.empty()) c.lambda = cli::parseComplex(r.lambda);
    if (!r.omega1.empty()) c.omega1 = cli::parseComplex(r.omega1);
    if (!r.omega2.empty()) c.omega2 = cli::parseComplex(r.omega2);
    if (!r.grid.empty()) c.grid = cli::parseGrid(r.grid);
    c.thetaBeta = r.thetaBeta;
    c.thetaBetaVee = r.thetaBetaVee;
    c.thetaDelta = r.thetaDelta;
    if (r.seriesTol > 0) c.defaults.budget.seriesTol = r.seriesTol;
    if (r.quadTol > 0) c.defaults.budget.quadTol = r.quadTol;
    if (r.maxTerms > 0) c.defaults.budget.maxTerms = r.maxTerms;
    if (r.nMax >= 0) c.defaults.budget.nMax = r.nMax;
    if (r.mMax >= 0) c.defaults.budget.mMax = r.mMax;
    c.format = r.format == "json" ? cli::Format::Json : cli::Format::Csv;
    c.out = r.out;
    c.seed = r.seed;
    c.steps = r.steps;
    c.sweep = r.sweep;
    c.tol = r.tol;
    c.criteria = r.criteria;
    c.qConstant = r.qConstant == "printed" ? conifold::qdilog::QConstant::AsPrinted
                                           : conifold::qdilog::QConstant::Imaginary;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerics for the resolved conifold: periods, hyperkahler metric, twistor and conformal-limit checks"};
    app.require_subcommand(1);
    RawOptions raw;
    using Cmd = std::function<int(const cli::RunConfig&, cli::Table&)>;
    const std::map<std::string, std::pair<Cmd, std::string>> commands{
        {"periods", {cli::cmdPeriods, "periods and Picard-Fuchs residual on t in M0"}},
        {"metric", {cli::cmdMetric, "hyperkahler metric, point or grid"}},
        {"ov-compare", {cli::cmdOvCompare, "eta tensors along t_k = 10^-k e^{i pi/4}"}},
        {"twistor-check", {cli::cmdTwistorCheck, "omega_3 from twistor coordinates vs closed form"}},
        {"conformal", {cli::cmdConformal, "conformal-limit coordinate X_beta_vee(t, lambda)"}},
        {"conjecture", {cli::cmdConjecture, "conjecture residual panel or sector sweep"}},
        {"qdilog", {cli::cmdQdilog, "quantum dilogarithm H and Q_H"}},
        {"verify-all", {cli::cmdVerifyAll, "acceptance suites with a machine-readable report"}},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        addCommon(sub, raw);
        subs[name] = sub;
    }
    subs["ov-compare"]->add_option("--steps", raw.steps, "number of points k = 1..steps")->check(CLI::Range(1, 8));
    subs["conjecture"]->add_option("--sweep", raw.sweep, "angles on the circle |lambda| = const");
    subs["conjecture"]->add_option("--tol", raw.tol, "residual tolerance");
    subs["conjecture"]->add_option("--q-constant", raw.qConstant, "imaginary or printed")
        ->check(CLI::IsMember({"imaginary", "printed"}));
    subs["verify-all"]->add_option("--criterion", raw.criteria, "run only these criteria");
    subs["verify-all"]->add_option("--q-constant", raw.qConstant, "imaginary or printed")
        ->check(CLI::IsMember({"imaginary", "printed"}));
    subs["qdilog"]->add_option("--omega1", raw.omega1, "period omega_1 (default 1)");
    subs["qdilog"]->add_option("--omega2", raw.omega2, "period omega_2 (default -lambda or i)");
    subs["qdilog"]->add_option("--q-constant", raw.qConstant, "imaginary or printed")
        ->check(CLI::IsMember({"imaginary", "printed"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string name;
    for (const auto& [n, sub] : subs)
        if (sub->parsed()) name = n;
    try {
        const cli::RunConfig cfg = resolve(raw);
        cli::Table table;
        const int status = commands.at(name).first(cfg, table);
        if (cfg.out.empty()) {
            cli::writeTable(table, cfg, std::cout);
        } else {
            std::ofstream f(cfg.out);
            if (!f) throw conifold::DomainError("cannot write " + cfg.out);
            cli::writeTable(table, cfg, f);
        }
        return status;
    } catch (const conifold::BudgetError& e) {
        std::cerr << name << ": budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const conifold::Error& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return 2;
    }
}
