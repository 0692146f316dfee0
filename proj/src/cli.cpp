#include "nmwit/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nmwit/eigen.hpp"
#include "nmwit/divisibility.hpp"
#include "nmwit/profiles.hpp"
#include "nmwit/random.hpp"
#include "nmwit/witness.hpp"

namespace nmwit {

namespace {

constexpr double scan_threshold = 1e-10;  // tolerated per-step increase

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// One {meta, rows} report rendered to CSV (meta as a leading comment row)
// or JSON with identical field names.
struct Report {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_meta(const std::string& k, const std::string& v) { meta.emplace_back(k, v); }
    void add_meta(const std::string& k, double v) { meta.emplace_back(k, fmt12(v)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "csv") {
            os << "#";
            for (const auto& [k, v] : meta) os << " " << k << "=" << v;
            os << "\n";
            for (std::size_t j = 0; j < columns.size(); ++j)
                os << columns[j] << (j + 1 < columns.size() ? "," : "");
            os << "\n";
            for (const auto& row : rows) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    os << fmt12(row[j]) << (j + 1 < row.size() ? "," : "");
                os << "\n";
            }
        } else if (format == "json") {
            nlohmann::ordered_json doc;
            auto& meta_obj = doc["meta"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : meta) meta_obj[k] = v;
            auto& rows_arr = doc["rows"] = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json r = nlohmann::ordered_json::object();
                for (std::size_t j = 0; j < row.size(); ++j) r[columns[j]] = row[j];
                rows_arr.push_back(std::move(r));
            }
            os << doc.dump(2) << "\n";
        } else {
            throw std::invalid_argument("unknown format: " + format);
        }
    }
};

void check_common(const RunConfig& cfg) {
    if (!(cfg.t_max > 0.0)) throw std::invalid_argument("tmax must be > 0");
    if (cfg.steps < 2) throw std::invalid_argument("steps must be >= 2");
    if (!(cfg.alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
    if (!(cfg.c > 0.0)) throw std::invalid_argument("c must be > 0");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("format must be csv or json");
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
    std::vector<double> g(steps);
    for (std::size_t i = 0; i < steps; ++i)
        g[i] = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    return g;
}

ContractiveKind parse_kind(const std::string& name) {
    if (name == "trace") return ContractiveKind::trace_distance;
    if (name == "infidelity") return ContractiveKind::infidelity;
    if (name == "relent") return ContractiveKind::relative_entropy;
    if (name == "renyi") return ContractiveKind::renyi;
    throw std::invalid_argument("unknown function kind: " + name);
}

}  // namespace

int run_fig1(const RunConfig& cfg, std::ostream& os) {
    check_common(cfg);
    if (!(cfg.t_star > 0.0)) throw std::invalid_argument("tstar must be > 0");
    const WitnessScenario sc = build_scenario({cfg.alpha, cfg.c}, cfg.t_star);
    Report rep;
    rep.add_meta("command", std::string("fig1"));
    rep.add_meta("alpha", cfg.alpha);
    rep.add_meta("c", cfg.c);
    rep.add_meta("tstar", cfg.t_star);
    rep.add_meta("tmax", cfg.t_max);
    rep.add_meta("steps", static_cast<double>(cfg.steps));
    rep.add_meta("lambda_star", sc.lambda_star);
    rep.add_meta("right_derivative", right_derivative(sc));
    rep.add_meta("t_up", sc.t_up ? fmt12(*sc.t_up) : std::string("none"));
    rep.columns = {"t", "negativity_full", "negativity_shortcut",
                   "analytic_half_trace_distance"};
    for (double t : uniform_grid(cfg.t_max, cfg.steps)) {
        const double full = witness_negativity(sc, t, NegativityMethod::full);
        const double shortcut = witness_negativity(sc, t, NegativityMethod::shortcut);
        rep.rows.push_back({t, full, shortcut, 0.5 * analytic_trace_distance(sc, t)});
    }
    rep.write(os, cfg.format);
    return 0;
}

int run_divisibility(const RunConfig& cfg, std::ostream& os) {
    check_common(cfg);
    if (cfg.s_values.empty() || cfg.t_values.empty())
        throw std::invalid_argument("divisibility needs --s and --t lists");
    for (double s : cfg.s_values)
        for (double t : cfg.t_values)
            if (s > t) {
                std::ostringstream msg;
                msg << "divisibility: rejected pair s=" << s << " > t=" << t;
                throw std::invalid_argument(msg.str());
            }
    const ENMParams p{cfg.alpha, cfg.c};
    Report rep;
    rep.add_meta("command", std::string("divisibility"));
    rep.add_meta("alpha", cfg.alpha);
    rep.add_meta("c", cfg.c);
    rep.add_meta("cp_tolerance", 1e-10);
    rep.columns = {"s", "t", "min_eigenvalue", "cp", "p1", "p2", "residual"};
    for (double s : cfg.s_values)
        for (double t : cfg.t_values) {
            const CpVerdict v = is_cp(enm_intermediate_choi(p, s, t));
            const DecompositionWitness w = enm_decomposition(p, s, t);
            rep.rows.push_back({s, t, v.min_eigenvalue, v.cp ? 1.0 : 0.0, w.p1, w.p2,
                                w.residual});
        }
    rep.write(os, cfg.format);
    return 0;
}

int run_scan(const RunConfig& cfg, std::ostream& os) {
    check_common(cfg);
    if (cfg.trials < 1) throw std::invalid_argument("scan needs --trials >= 1");
    const ContractiveKind kind = parse_kind(cfg.function);
    if (cfg.gamma_override && kind != ContractiveKind::trace_distance)
        throw std::invalid_argument(
            "--gamma dynamics can leave the state space; only --function trace is defined");
    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.steps);
    Rng rng(cfg.seed);
    Report rep;
    rep.add_meta("command", std::string("scan"));
    rep.add_meta("function", cfg.function);
    if (cfg.gamma_override) {
        rep.add_meta("gamma1", (*cfg.gamma_override)[0]);
        rep.add_meta("gamma2", (*cfg.gamma_override)[1]);
        rep.add_meta("gamma3", (*cfg.gamma_override)[2]);
    } else {
        rep.add_meta("alpha", cfg.alpha);
        rep.add_meta("c", cfg.c);
    }
    rep.add_meta("tmax", cfg.t_max);
    rep.add_meta("steps", static_cast<double>(cfg.steps));
    rep.add_meta("trials", static_cast<double>(cfg.trials));
    rep.add_meta("seed", static_cast<double>(cfg.seed));
    rep.add_meta("threshold", scan_threshold);
    rep.columns = {"trial", "max_increase"};
    double overall = -1.0;
    for (std::size_t k = 0; k < cfg.trials; ++k) {
        const DensityMatrix rho = random_state(rng, 2);
        const DensityMatrix sigma = random_state(rng, 2);
        std::vector<double> series;
        if (cfg.gamma_override) {
            const auto& g = *cfg.gamma_override;
            series.reserve(grid.size());
            for (double t : grid) {
                // constant rates integrate in closed form
                const PauliChannel ch = channel_from_eigenvalues(
                    {std::exp(-2.0 * (g[1] + g[2]) * t), std::exp(-2.0 * (g[0] + g[2]) * t),
                     std::exp(-2.0 * (g[0] + g[1]) * t)});
                series.push_back(
                    0.5 * trace_norm(apply_pauli(ch, rho.mat - sigma.mat)));
            }
        } else {
            series = contractive_scan(kind, {cfg.alpha, cfg.c}, rho, sigma, grid,
                                      cfg.renyi_order);
        }
        double max_inc = 0.0;
        for (std::size_t i = 1; i < series.size(); ++i)
            max_inc = std::max(max_inc, series[i] - series[i - 1]);
        overall = std::max(overall, max_inc);
        rep.rows.push_back({static_cast<double>(k), max_inc});
    }
    const bool pass = overall <= scan_threshold;
    rep.add_meta("max_increase", overall);
    rep.add_meta("pass", pass ? 1.0 : 0.0);
    rep.write(os, cfg.format);
    return pass ? 0 : 1;
}

namespace {

void read_targets_file(const std::string& path, std::vector<double>& times,
                       std::vector<double>& targets) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open targets file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double t, v;
        if (!(ls >> t >> v)) throw std::runtime_error("bad targets line: " + line);
        times.push_back(t);
        targets.push_back(v);
    }
    if (times.empty()) throw std::runtime_error("targets file has no rows");
}

}  // namespace

int run_profile_match(const RunConfig& cfg, std::ostream& os) {
    check_common(cfg);
    const ContractiveKind kind = parse_kind(cfg.function);
    Rng rng(cfg.seed);
    const DensityMatrix rho0 = random_state(rng, 2);
    const DensityMatrix sigma0 = random_state(rng, 2);

    std::vector<double> times, targets;
    if (cfg.enm_targets) {
        times = uniform_grid(cfg.t_max, cfg.steps);
        targets = contractive_scan(kind, {cfg.alpha, cfg.c}, rho0, sigma0, times,
                                   cfg.renyi_order);
    } else if (!cfg.targets_path.empty()) {
        read_targets_file(cfg.targets_path, times, targets);
    } else {
        throw std::invalid_argument("profile-match needs --targets FILE or --enm-targets");
    }

    const ProfileMatch pm = match_profile(times, targets, kind, rho0, sigma0,
                                          cfg.renyi_order);
    Report rep;
    rep.add_meta("command", std::string("profile-match"));
    rep.add_meta("function", cfg.function);
    rep.add_meta("seed", static_cast<double>(cfg.seed));
    rep.add_meta("source", cfg.enm_targets ? std::string("enm") : cfg.targets_path);
    rep.add_meta("f0", pm.achieved.front());
    rep.add_meta("all_matched", pm.all_matched() ? 1.0 : 0.0);
    rep.columns = {"t", "target", "a", "achieved", "feasible"};
    for (std::size_t i = 0; i < pm.times.size(); ++i)
        rep.rows.push_back({pm.times[i], pm.targets[i], pm.a[i], pm.achieved[i],
                            pm.feasible[i] ? 1.0 : 0.0});
    rep.write(os, cfg.format);
    return pm.all_matched() ? 0 : 1;
}

int run_command(const RunConfig& cfg) {
    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
    }
    std::ostream& os = cfg.out.empty() ? std::cout : file;
    if (cfg.command == "fig1") return run_fig1(cfg, os);
    if (cfg.command == "divisibility") return run_divisibility(cfg, os);
    if (cfg.command == "scan") return run_scan(cfg, os);
    if (cfg.command == "profile-match") return run_profile_match(cfg, os);
    throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace nmwit
