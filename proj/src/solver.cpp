#include "gridgame/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <queue>
#include <sstream>
#include <vector>

#include <unistd.h>

#include "gridgame/errors.hpp"
#include "gridgame/numfmt.hpp"

namespace gridgame {

namespace {

constexpr double kIntTol = 1e-6;
constexpr double kObjTol = 1e-9;

std::vector<int> binary_vars(const MilpModel& model) {
    std::vector<int> bins;
    for (int j = 0; j < model.num_vars(); ++j)
        if (model.var(j).kind == VarKind::Binary) bins.push_back(j);
    return bins;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

MilpSolution solve_lp(const MilpModel& model) {
    const auto t0 = std::chrono::steady_clock::now();
    BoundedSimplex simplex(model);
    LpResult r = simplex.solve();
    MilpSolution sol;
    sol.status = r.status;
    sol.values = std::move(r.x);
    sol.objective = r.objective;
    sol.stats.nodes = 1;
    sol.stats.simplex_iterations = r.iterations;
    sol.stats.wall_seconds = seconds_since(t0);
    return sol;
}

LpResult solve_lp_detailed(const MilpModel& model) {
    BoundedSimplex simplex(model);
    return simplex.solve();
}

MilpSolution solve_milp(const MilpModel& model, const MilpLimits& limits) {
    const auto t0 = std::chrono::steady_clock::now();
    model.validate();
    const std::vector<int> bins = binary_vars(model);

    BoundedSimplex simplex(model);

    struct Node {
        double bound = 0.0;
        std::int64_t id = 0;
        std::shared_ptr<const Basis> warm;
        std::vector<std::pair<int, int>> fixings;  // (binary var, value)
    };
    struct NodeOrder {
        bool operator()(const Node& a, const Node& b) const {
            if (a.bound != b.bound) return a.bound > b.bound;
            return a.id > b.id;
        }
    };
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;

    MilpSolution best;
    best.status = SolveStatus::Infeasible;
    bool have_incumbent = false;
    double incumbent = std::numeric_limits<double>::infinity();

    std::int64_t next_id = 0;
    std::int64_t explored = 0;
    std::int64_t iterations = 0;
    bool limit_hit = false;

    open.push(Node{-std::numeric_limits<double>::infinity(), next_id++, nullptr, {}});

    while (!open.empty()) {
        if (explored >= limits.node_cap ||
            (limits.time_cap_seconds > 0.0 && seconds_since(t0) > limits.time_cap_seconds)) {
            limit_hit = true;
            break;
        }
        Node node = open.top();
        open.pop();
        if (have_incumbent && node.bound >= incumbent - kObjTol) continue;

        simplex.reset_bounds();
        for (const auto& [var, val] : node.fixings)
            simplex.set_bounds(var, static_cast<double>(val), static_cast<double>(val));

        LpResult lp;
        try {
            lp = simplex.solve(node.warm.get());
        } catch (const NumericalError&) {
            lp = simplex.solve(nullptr);  // one cold retry on a bad warm start
        }
        ++explored;
        iterations += lp.iterations;

        if (lp.status == SolveStatus::Infeasible) continue;
        if (lp.status == SolveStatus::Unbounded) {
            if (node.fixings.empty()) {
                MilpSolution sol;
                sol.status = SolveStatus::Unbounded;
                sol.values = std::move(lp.x);
                sol.objective = lp.objective;
                sol.stats.nodes = explored;
                sol.stats.simplex_iterations = iterations;
                sol.stats.wall_seconds = seconds_since(t0);
                return sol;
            }
            throw NumericalError("unbounded node below a bounded root");
        }
        if (have_incumbent && lp.objective >= incumbent - kObjTol) continue;

        // Most fractional binary, ties to the lowest variable id.
        int branch_var = -1;
        double branch_frac = kIntTol;
        for (int j : bins) {
            const double x = lp.x[static_cast<size_t>(j)];
            const double score = std::min(std::abs(x), std::abs(1.0 - x));
            if (score > branch_frac + 1e-12) {
                branch_frac = score;
                branch_var = j;
            }
        }

        if (branch_var < 0) {
            // Integral within tolerance: candidate incumbent.
            if (!have_incumbent || lp.objective < incumbent - kObjTol) {
                have_incumbent = true;
                incumbent = lp.objective;
                best.status = SolveStatus::Optimal;
                best.values = lp.x;
                best.objective = lp.objective;
                if (limits.incumbent_trace != nullptr)
                    limits.incumbent_trace->emplace_back(explored, incumbent);
            }
            continue;
        }

        auto warm = std::make_shared<Basis>(simplex.basis());
        Node down;
        down.bound = lp.objective;
        down.id = next_id++;
        down.warm = warm;
        down.fixings = node.fixings;
        down.fixings.emplace_back(branch_var, 0);
        Node up;
        up.bound = lp.objective;
        up.id = next_id++;
        up.warm = warm;
        up.fixings = node.fixings;
        up.fixings.emplace_back(branch_var, 1);
        open.push(std::move(down));
        open.push(std::move(up));
    }

    best.stats.nodes = explored;
    best.stats.simplex_iterations = iterations;
    best.stats.wall_seconds = seconds_since(t0);
    if (limit_hit) {
        best.status = SolveStatus::LimitReached;  // incumbent values kept if any
        return best;
    }
    if (!have_incumbent) best.status = SolveStatus::Infeasible;
    return best;
}

MilpSolution brute_force_milp(const MilpModel& model) {
    const auto t0 = std::chrono::steady_clock::now();
    model.validate();
    const std::vector<int> bins = binary_vars(model);
    if (bins.size() > 20)
        throw TooLarge("brute_force_milp: " + std::to_string(bins.size()) +
                       " binaries exceed the 20-binary cap");

    BoundedSimplex simplex(model);
    MilpSolution best;
    best.status = SolveStatus::Infeasible;
    bool have_best = false;
    bool any_unbounded = false;
    std::int64_t iterations = 0;

    const std::uint64_t total = 1ull << bins.size();
    for (std::uint64_t a = 0; a < total; ++a) {
        simplex.reset_bounds();
        for (size_t k = 0; k < bins.size(); ++k) {
            // First binary is the most significant bit: lexicographic order.
            const int v = (a >> (bins.size() - 1 - k)) & 1u ? 1 : 0;
            simplex.set_bounds(bins[k], v, v);
        }
        LpResult lp = simplex.solve();
        iterations += lp.iterations;
        if (lp.status == SolveStatus::Unbounded) any_unbounded = true;
        if (lp.status != SolveStatus::Optimal) continue;
        if (!have_best || lp.objective < best.objective - 1e-12) {
            have_best = true;
            best.status = SolveStatus::Optimal;
            best.values = std::move(lp.x);
            best.objective = lp.objective;
        }
    }
    if (!have_best && any_unbounded) best.status = SolveStatus::Unbounded;
    best.stats.nodes = static_cast<std::int64_t>(total);
    best.stats.simplex_iterations = iterations;
    best.stats.wall_seconds = seconds_since(t0);
    return best;
}

void export_external(const MilpModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_model_dump(model, out);
    out.flush();
    if (!out) throw IoError("failed writing " + path);
}

std::optional<MilpSolution> cross_check_external(const MilpModel& model,
                                                 const std::string& env_var) {
    const char* exe = std::getenv(env_var.c_str());
    if (exe == nullptr || *exe == '\0') return std::nullopt;

    const std::string base = "gridgame_xcheck_" + std::to_string(::getpid());
    const std::string dump_path = "/tmp/" + base + ".milp";
    const std::string sol_path = "/tmp/" + base + ".sol";
    export_external(model, dump_path);
    const std::string cmd = std::string(exe) + " " + dump_path + " " + sol_path;
    const int rc = std::system(cmd.c_str());
    std::remove(dump_path.c_str());
    if (rc != 0) {
        std::remove(sol_path.c_str());
        throw IoError("external solver exited with status " + std::to_string(rc));
    }
    std::ifstream in(sol_path);
    if (!in) throw IoError("external solver produced no solution file");
    MilpSolution sol;
    std::string status, obj;
    if (!(in >> status >> obj)) throw ParseError("malformed external solution file");
    if (status == "Optimal")
        sol.status = SolveStatus::Optimal;
    else if (status == "Infeasible")
        sol.status = SolveStatus::Infeasible;
    else if (status == "Unbounded")
        sol.status = SolveStatus::Unbounded;
    else
        sol.status = SolveStatus::LimitReached;
    sol.objective = parse_double(obj);
    sol.values.assign(static_cast<size_t>(model.num_vars()), 0.0);
    int var;
    std::string val;
    while (in >> var >> val) {
        if (var >= 0 && var < model.num_vars()) sol.values[static_cast<size_t>(var)] = parse_double(val);
    }
    in.close();
    std::remove(sol_path.c_str());
    return sol;
}

}  // namespace gridgame
