// cli.hpp — command implementations behind the nmwit executable. Each command
// renders a CSV or JSON report ({meta, rows}) and returns the process exit
// code; property-style commands return nonzero when a property fails, so the
// binary doubles as a CI assertion harness.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nmwit {

struct RunConfig {
    std::string command;
    double alpha = 2.0;
    double c = 0.5;
    double t_star = 1.0;
    double t_max = 6.0;
    std::size_t steps = 600;  // grid points
    std::uint64_t seed = 1;
    std::string format = "csv";  // csv | json
    std::string out;             // empty = stdout
    std::size_t trials = 200;
    std::string function = "trace";  // trace | infidelity | relent | renyi
    double renyi_order = 2.0;
    std::vector<double> s_values;  // divisibility grid
    std::vector<double> t_values;
    std::string targets_path;  // profile-match input file (t,target per line)
    bool enm_targets = false;  // synthesize targets from the ENM scan instead
    std::optional<std::array<double, 3>> gamma_override;  // constant decay rates
};

int run_fig1(const RunConfig& cfg, std::ostream& os);
int run_divisibility(const RunConfig& cfg, std::ostream& os);
int run_scan(const RunConfig& cfg, std::ostream& os);
int run_profile_match(const RunConfig& cfg, std::ostream& os);

// dispatch on cfg.command and write to cfg.out (or stdout)
int run_command(const RunConfig& cfg);

}  // namespace nmwit
