#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "solv3/config.hpp"
#include "solv3/errors.hpp"
#include "solv3/selftest.hpp"
#include "solv3/simulate.hpp"

namespace {

solv3::LinearSystem load_system(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw solv3::ParseError("cannot read configuration file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return solv3::parse_system_text(ss.str());
}

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw solv3::ParseError("expected a comma-separated list of numbers, got \"" + text +
                                    "\"");
        }
    }
    return out;
}

int run_decide(const std::string& config, const std::string& output) {
    const auto sys = load_system(config);
    const auto verdict = solv3::decide(sys);
    const auto rec = solv3::verdict_record(verdict);
    if (output.empty()) {
        std::cout << rec.dump(2) << "\n";
    } else {
        std::ofstream f(output);
        if (!f) throw solv3::NumericError("cannot open output file: " + output);
        f << rec.dump(2) << "\n";
    }
    return 0;
}

int run_simulate(const std::string& config, const std::string& u_text, double duration, double dt,
                 const std::string& start_text, bool backward, const std::string& output) {
    const auto sys = load_system(config);
    std::vector<double> u = u_text.empty() ? std::vector<double>(sys.controls.size(), 0.0)
                                           : parse_csv_doubles(u_text);
    if (u.size() != sys.controls.size()) {
        throw solv3::SemanticError("--u must list one value per control field");
    }
    solv3::GroupElement start;
    if (!start_text.empty()) {
        const auto s = parse_csv_doubles(start_text);
        if (s.size() != 3) throw solv3::SemanticError("--start must be t,v1,v2");
        start = {s[0], solv3::Vec2(s[1], s[2])};
    }
    const solv3::ControlSignal signal{{duration, u}};
    const auto traj = solv3::integrate(sys, start, signal, dt, backward);
    if (traj.blew_up) {
        std::cerr << "warning: trajectory exceeded the blow-up guard; output is partial\n";
    }
    if (output.empty() || output == "-") {
        std::cout.precision(17);
        std::cout << "s,tau,v1,v2\n";
        for (const auto& s : traj.samples) {
            std::cout << s.s << ',' << s.g.t << ',' << s.g.v.x() << ',' << s.g.v.y() << '\n';
        }
    } else {
        solv3::write_trajectory_csv(output, traj);
    }
    return 0;
}

int run_reachable(const std::string& config, solv3::ReachParams params,
                  const std::vector<double>& lo, const std::vector<double>& hi,
                  const std::vector<int>& res) {
    const auto sys = load_system(config);
    if (lo.size() != 3 || hi.size() != 3) throw solv3::SemanticError("--lo/--hi must be x,y,z");
    if (res.size() != 3) throw solv3::SemanticError("--res must be nx,ny,nz");
    params.grid.lo = solv3::Vec3(lo[0], lo[1], lo[2]);
    params.grid.hi = solv3::Vec3(hi[0], hi[1], hi[2]);
    params.grid.nx = res[0];
    params.grid.ny = res[1];
    params.grid.nz = res[2];
    for (int i = 0; i < 3; ++i) {
        if (!(params.grid.hi(i) > params.grid.lo(i))) {
            throw solv3::SemanticError("--hi must exceed --lo in every coordinate");
        }
    }
    const auto sample = solv3::reachable_sample(sys, params);
    nlohmann::json out{{"visited", sample.visited},
                       {"total", sample.total},
                       {"occupancy", sample.occupancy},
                       {"blown_up", sample.blown_up}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"controllability analysis on the solvable 3D model groups"};
    app.require_subcommand(1);

    std::string config, output, u_text, start_text;
    double duration = 10.0, dt = 1e-3;
    bool backward = false;

    auto* decide_cmd = app.add_subcommand("decide", "decide controllability of a configured system");
    decide_cmd->add_option("config", config, "system configuration (JSON)")->required();
    decide_cmd->add_option("-o,--output", output, "write the verdict to a file");

    auto* sim_cmd = app.add_subcommand("simulate", "integrate the controlled system");
    sim_cmd->add_option("config", config, "system configuration (JSON)")->required();
    sim_cmd->add_option("--u", u_text, "constant control values u1,u2,...");
    sim_cmd->add_option("--duration", duration, "integration time");
    sim_cmd->add_option("--dt", dt, "integration step");
    sim_cmd->add_option("--start", start_text, "initial point t,v1,v2 (default identity)");
    sim_cmd->add_flag("--backward", backward, "integrate the time-reversed field");
    sim_cmd->add_option("-o,--output", output, "CSV output path (default stdout)");

    solv3::ReachParams params;
    std::vector<double> lo{-2, -2, -2}, hi{2, 2, 2};
    std::vector<int> res{20, 20, 20};
    auto* reach_cmd = app.add_subcommand("reachable", "sample the reachable set");
    reach_cmd->add_option("config", config, "system configuration (JSON)")->required();
    reach_cmd->add_option("--trajectories", params.trajectories, "number of sampled trajectories");
    reach_cmd->add_option("--horizon", params.horizon, "time horizon per trajectory");
    reach_cmd->add_option("--u-bound", params.u_bound, "bang-bang control magnitude");
    reach_cmd->add_option("--dt", params.dt, "integration step");
    reach_cmd->add_option("--seed", params.seed, "sampling seed");
    reach_cmd->add_option("--lo", lo, "occupancy box lower corner x,y,z")->delimiter(',');
    reach_cmd->add_option("--hi", hi, "occupancy box upper corner x,y,z")->delimiter(',');
    reach_cmd->add_option("--res", res, "occupancy grid resolution nx,ny,nz")->delimiter(',');
    reach_cmd->add_flag("--backward", params.backward, "sample the backward reachable set");

    auto* self_cmd = app.add_subcommand("selftest", "run the internal consistency sweep");
    unsigned self_seed = 1;
    self_cmd->add_option("--seed", self_seed, "randomization seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*decide_cmd) return run_decide(config, output);
        if (*sim_cmd) {
            return run_simulate(config, u_text, duration, dt, start_text, backward, output);
        }
        if (*reach_cmd) return run_reachable(config, params, lo, hi, res);
        if (*self_cmd) {
            const auto result = solv3::run_selftest(self_seed);
            for (const auto& f : result.failures) std::cerr << "FAIL: " << f << "\n";
            std::cout << (result.passed ? "selftest passed" : "selftest FAILED") << "\n";
            return result.passed ? 0 : 1;
        }
    } catch (const solv3::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
