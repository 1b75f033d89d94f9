#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gridgame {

enum class Owner { Power, Gas };
enum class AssetKind { Line, Generator, Pipeline };

const char* to_string(Owner o);
const char* to_string(AssetKind k);

struct Horizon {
    int num_periods = 0;
    std::string period_label;
    bool operator==(const Horizon&) const = default;
};

struct MaintenanceTask {
    Owner owner = Owner::Power;
    AssetKind kind = AssetKind::Line;
    std::string asset_id;
    int duration = 0;
    double cost_per_period = 0.0;
    bool operator==(const MaintenanceTask&) const = default;
};

struct Line {
    std::string id;
    int from_bus = -1;
    int to_bus = -1;
    double susceptance = 0.0;  // per unit
    double capacity = 0.0;     // MW
    int task = -1;             // index into CaseData::tasks, -1 if none
    bool operator==(const Line&) const = default;
};

struct GasLink {
    int gas_node = -1;
    double efficiency = 0.0;  // MW produced per unit of gas consumed
    bool operator==(const GasLink&) const = default;
};

struct Generator {
    std::string id;
    int bus = -1;
    double p_min = 0.0;
    double p_max = 0.0;
    double ramp_up = 0.0;    // MW per period
    double ramp_down = 0.0;  // MW per period
    int min_on = 1;
    int min_off = 1;
    std::vector<double> fixed_cost;    // per period
    std::vector<double> linear_cost;   // per period, $/MW
    std::vector<double> startup_cost;  // per period
    std::vector<double> energy_price;  // per period, $/MW
    std::optional<GasLink> gas_link;
    int task = -1;
    bool operator==(const Generator&) const = default;
};

struct PowerNetwork {
    std::vector<std::string> buses;
    std::vector<Line> lines;
    std::vector<Generator> generators;
    std::vector<std::vector<double>> load;       // [bus][period] MW
    std::vector<std::vector<double>> shed_cost;  // [bus][period] $/MW
    std::vector<double> angle_min;               // per bus, radians
    std::vector<double> angle_max;
    double angle_diff_limit = 0.0;  // radians, per line
    bool operator==(const PowerNetwork&) const = default;
};

struct Pipeline {
    std::string id;
    int from_node = -1;
    int to_node = -1;
    double weymouth_c = 0.0;               // flow/pressure constant
    double flow_cap = 0.0;                 // PWL domain half-width
    std::optional<double> compressor;      // compression factor, >= 1
    int task = -1;
    bool operator==(const Pipeline&) const = default;
};

struct Well {
    std::string id;
    int node = -1;
    double g_min = 0.0;
    double g_max = 0.0;
    int min_on = 1;
    int min_off = 1;
    std::vector<double> price;  // per period, $/volume
    bool operator==(const Well&) const = default;
};

struct Storage {
    std::string id;
    int node = -1;
    double inv_min = 0.0;
    double inv_max = 0.0;
    double rate_out_max = 0.0;  // max withdrawal per period
    double rate_in_max = 0.0;   // max injection per period
    double initial_inventory = 0.0;
    std::vector<double> price;  // per period, $/volume
    bool operator==(const Storage&) const = default;
};

struct GasNetwork {
    std::vector<std::string> nodes;
    std::vector<Pipeline> pipelines;
    std::vector<Well> wells;
    std::vector<Storage> storages;
    std::vector<std::vector<double>> load;       // [node][period], non-gas-fired
    std::vector<std::vector<double>> shed_cost;  // [node][period]
    std::vector<double> pr_min;                  // per node, squared pressure
    std::vector<double> pr_max;
    bool operator==(const GasNetwork&) const = default;
};

struct ConcurrencyCaps {
    std::vector<int> max_lines;  // per period
    std::vector<int> max_gens;
    std::vector<int> max_pipes;
    bool operator==(const ConcurrencyCaps&) const = default;
};

struct BigMSet {
    double m_line = 0.0;   // MW
    double m_pipe = 0.0;   // squared-pressure units
    double m_angle = 0.0;  // radians
};

struct CaseData {
    Horizon horizon;
    PowerNetwork power;
    GasNetwork gas;
    std::vector<MaintenanceTask> tasks;
    ConcurrencyCaps caps;

    // Derived at load: task indices per owner in file order, and the
    // maintainable asset row layout shared by schedules and the dispatch model.
    std::vector<int> power_tasks;
    std::vector<int> gas_tasks;
    std::vector<int> maintainable_lines;  // line indices, task order
    std::vector<int> maintainable_gens;   // generator indices, task order
    std::vector<int> maintainable_pipes;  // pipeline indices, task order

    bool operator==(const CaseData&) const = default;

    int num_periods() const { return horizon.num_periods; }
};

/// Parses a case file. ParseError on malformed JSON, SchemaError on missing or
/// ill-typed fields, ReferenceError on dangling ids.
CaseData load_case(const std::string& path);
CaseData parse_case_text(const std::string& text);

/// Serializes a case back to its JSON document form (full per-period arrays).
std::string write_case(const CaseData& c);

/// Returns one human-readable violation per broken invariant; empty means the
/// case is valid. Never throws.
std::vector<std::string> validate_case(const CaseData& c);

/// Big-M values sized from the case data so the relaxed maintained-asset
/// constraints can never bind for a feasible assignment.
BigMSet derive_big_m(const CaseData& c);

}  // namespace gridgame
