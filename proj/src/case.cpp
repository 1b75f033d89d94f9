#include "gridgame/case.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gridgame/errors.hpp"
#include "gridgame/numfmt.hpp"
#include "gridgame/pwl.hpp"

namespace gridgame {

using nlohmann::ordered_json;

const char* to_string(Owner o) { return o == Owner::Power ? "power" : "gas"; }

const char* to_string(AssetKind k) {
    switch (k) {
        case AssetKind::Line: return "line";
        case AssetKind::Generator: return "generator";
        case AssetKind::Pipeline: return "pipeline";
    }
    return "?";
}

namespace {

const ordered_json& need(const ordered_json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

double need_num(const ordered_json& j, const char* key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_number()) throw SchemaError(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

int need_int(const ordered_json& j, const char* key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_number_integer()) throw SchemaError(where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

std::string need_str(const ordered_json& j, const char* key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_string()) throw SchemaError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

// Scalar-or-array per-period series.
std::vector<double> need_series(const ordered_json& j, const char* key, int periods,
                                const std::string& where) {
    const auto& v = need(j, key, where);
    std::vector<double> out;
    if (v.is_number()) {
        out.assign(static_cast<size_t>(periods), v.get<double>());
        return out;
    }
    if (!v.is_array() || static_cast<int>(v.size()) != periods)
        throw SchemaError(where + ": field '" + key + "' must be a number or an array of length " +
                          std::to_string(periods));
    for (const auto& e : v) {
        if (!e.is_number()) throw SchemaError(where + ": field '" + key + "' has a non-number entry");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<int> need_int_series(const ordered_json& j, const char* key, int periods,
                                 const std::string& where) {
    const auto& v = need(j, key, where);
    std::vector<int> out;
    if (v.is_number_integer()) {
        out.assign(static_cast<size_t>(periods), v.get<int>());
        return out;
    }
    if (!v.is_array() || static_cast<int>(v.size()) != periods)
        throw SchemaError(where + ": field '" + key + "' must be an integer or an array of length " +
                          std::to_string(periods));
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw SchemaError(where + ": '" + key + "' has a non-integer entry");
        out.push_back(e.get<int>());
    }
    return out;
}

// [entity][period] matrix aligned with an id list.
std::vector<std::vector<double>> need_matrix(const ordered_json& j, const char* key, size_t entities,
                                             int periods, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_array() || v.size() != entities)
        throw SchemaError(where + ": '" + key + "' must be an array with one row per entity (" +
                          std::to_string(entities) + ")");
    std::vector<std::vector<double>> out;
    for (const auto& row : v) {
        if (!row.is_array() || static_cast<int>(row.size()) != periods)
            throw SchemaError(where + ": '" + key + "' rows must have length " +
                              std::to_string(periods));
        std::vector<double> r;
        for (const auto& e : row) {
            if (!e.is_number())
                throw SchemaError(where + ": '" + key + "' has a non-number entry");
            r.push_back(e.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

int resolve(const std::vector<std::string>& ids, const std::string& id, const std::string& what) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw ReferenceError("unknown " + what + " id '" + id + "'");
    return static_cast<int>(it - ids.begin());
}

ordered_json series_json(const std::vector<double>& v) {
    ordered_json a = ordered_json::array();
    for (double x : v) a.push_back(x);
    return a;
}

ordered_json int_series_json(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x);
    return a;
}

ordered_json matrix_json(const std::vector<std::vector<double>>& m) {
    ordered_json a = ordered_json::array();
    for (const auto& row : m) a.push_back(series_json(row));
    return a;
}

}  // namespace

CaseData parse_case_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("case file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("case file top level must be a JSON object");

    CaseData c;

    const auto& jh = need(j, "horizon", "horizon");
    c.horizon.num_periods = need_int(jh, "num_periods", "horizon");
    c.horizon.period_label = need_str(jh, "period_label", "horizon");
    const int T = c.horizon.num_periods;
    if (T < 1) throw SchemaError("horizon: num_periods must be >= 1");

    // --- power section -----------------------------------------------------
    const auto& jp = need(j, "power", "power");
    for (const auto& b : need(jp, "buses", "power")) c.power.buses.push_back(b.get<std::string>());

    for (const auto& jl : need(jp, "lines", "power")) {
        Line l;
        l.id = need_str(jl, "id", "line");
        l.from_bus = resolve(c.power.buses, need_str(jl, "from", "line " + l.id), "bus");
        l.to_bus = resolve(c.power.buses, need_str(jl, "to", "line " + l.id), "bus");
        l.susceptance = need_num(jl, "susceptance", "line " + l.id);
        l.capacity = need_num(jl, "capacity", "line " + l.id);
        c.power.lines.push_back(std::move(l));
    }
    for (const auto& jg : need(jp, "generators", "power")) {
        Generator g;
        g.id = need_str(jg, "id", "generator");
        g.bus = resolve(c.power.buses, need_str(jg, "bus", "generator " + g.id), "bus");
        g.p_min = need_num(jg, "p_min", "generator " + g.id);
        g.p_max = need_num(jg, "p_max", "generator " + g.id);
        g.ramp_up = need_num(jg, "ramp_up", "generator " + g.id);
        g.ramp_down = need_num(jg, "ramp_down", "generator " + g.id);
        g.min_on = need_int(jg, "min_on", "generator " + g.id);
        g.min_off = need_int(jg, "min_off", "generator " + g.id);
        c.power.generators.push_back(std::move(g));
    }
    c.power.load = need_matrix(jp, "load", c.power.buses.size(), T, "power");
    {
        const auto& ab = need(jp, "angle_bounds", "power");
        if (!ab.is_array() || ab.size() != c.power.buses.size())
            throw SchemaError("power: angle_bounds must have one [min,max] pair per bus");
        for (const auto& pair : ab) {
            if (!pair.is_array() || pair.size() != 2)
                throw SchemaError("power: angle_bounds entries must be [min,max]");
            c.power.angle_min.push_back(pair[0].get<double>());
            c.power.angle_max.push_back(pair[1].get<double>());
        }
    }
    c.power.angle_diff_limit = need_num(jp, "angle_diff_limit", "power");

    // --- gas section ---------------------------------------------------------
    const auto& jg = need(j, "gas", "gas");
    for (const auto& n : need(jg, "nodes", "gas")) c.gas.nodes.push_back(n.get<std::string>());
    for (const auto& jpl : need(jg, "pipelines", "gas")) {
        Pipeline p;
        p.id = need_str(jpl, "id", "pipeline");
        p.from_node = resolve(c.gas.nodes, need_str(jpl, "from", "pipeline " + p.id), "gas node");
        p.to_node = resolve(c.gas.nodes, need_str(jpl, "to", "pipeline " + p.id), "gas node");
        p.weymouth_c = need_num(jpl, "weymouth_c", "pipeline " + p.id);
        p.flow_cap = need_num(jpl, "flow_cap", "pipeline " + p.id);
        if (jpl.contains("compressor_factor"))
            p.compressor = jpl["compressor_factor"].get<double>();
        c.gas.pipelines.push_back(std::move(p));
    }
    for (const auto& jw : need(jg, "wells", "gas")) {
        Well w;
        w.id = need_str(jw, "id", "well");
        w.node = resolve(c.gas.nodes, need_str(jw, "node", "well " + w.id), "gas node");
        w.g_min = need_num(jw, "g_min", "well " + w.id);
        w.g_max = need_num(jw, "g_max", "well " + w.id);
        w.min_on = need_int(jw, "min_on", "well " + w.id);
        w.min_off = need_int(jw, "min_off", "well " + w.id);
        c.gas.wells.push_back(std::move(w));
    }
    for (const auto& js : need(jg, "storages", "gas")) {
        Storage s;
        s.id = need_str(js, "id", "storage");
        s.node = resolve(c.gas.nodes, need_str(js, "node", "storage " + s.id), "gas node");
        s.inv_min = need_num(js, "inv_min", "storage " + s.id);
        s.inv_max = need_num(js, "inv_max", "storage " + s.id);
        s.rate_out_max = need_num(js, "rate_out_max", "storage " + s.id);
        s.rate_in_max = need_num(js, "rate_in_max", "storage " + s.id);
        s.initial_inventory = need_num(js, "initial_inventory", "storage " + s.id);
        c.gas.storages.push_back(std::move(s));
    }
    c.gas.load = need_matrix(jg, "load", c.gas.nodes.size(), T, "gas");
    {
        const auto& pb = need(jg, "sq_pressure_bounds", "gas");
        if (!pb.is_array() || pb.size() != c.gas.nodes.size())
            throw SchemaError("gas: sq_pressure_bounds must have one [min,max] pair per node");
        for (const auto& pair : pb) {
            if (!pair.is_array() || pair.size() != 2)
                throw SchemaError("gas: sq_pressure_bounds entries must be [min,max]");
            c.gas.pr_min.push_back(pair[0].get<double>());
            c.gas.pr_max.push_back(pair[1].get<double>());
        }
    }

    // --- coupling ------------------------------------------------------------
    for (const auto& jc : need(j, "coupling", "coupling")) {
        const std::string gid = need_str(jc, "generator", "coupling");
        GasLink link;
        link.gas_node = resolve(c.gas.nodes, need_str(jc, "gas_node", "coupling " + gid), "gas node");
        link.efficiency = need_num(jc, "efficiency", "coupling " + gid);
        bool found = false;
        for (auto& g : c.power.generators)
            if (g.id == gid) {
                g.gas_link = link;
                found = true;
                break;
            }
        if (!found) throw ReferenceError("coupling references unknown generator id '" + gid + "'");
    }

    // --- costs ---------------------------------------------------------------
    const auto& jco = need(j, "costs", "costs");
    c.power.shed_cost = need_matrix(jco, "power_shed", c.power.buses.size(), T, "costs");
    c.gas.shed_cost = need_matrix(jco, "gas_shed", c.gas.nodes.size(), T, "costs");
    for (const auto& jgc : need(jco, "generators", "costs")) {
        const std::string gid = need_str(jgc, "id", "costs.generators");
        bool found = false;
        for (auto& g : c.power.generators)
            if (g.id == gid) {
                g.fixed_cost = need_series(jgc, "fixed", T, "costs for " + gid);
                g.linear_cost = need_series(jgc, "linear", T, "costs for " + gid);
                g.startup_cost = need_series(jgc, "startup", T, "costs for " + gid);
                g.energy_price = need_series(jgc, "energy_price", T, "costs for " + gid);
                found = true;
                break;
            }
        if (!found) throw ReferenceError("costs reference unknown generator id '" + gid + "'");
    }
    for (auto& g : c.power.generators)
        if (g.fixed_cost.empty())
            throw SchemaError("costs: no cost entry for generator '" + g.id + "'");
    for (const auto& jwc : need(jco, "wells", "costs")) {
        const std::string wid = need_str(jwc, "id", "costs.wells");
        bool found = false;
        for (auto& w : c.gas.wells)
            if (w.id == wid) {
                w.price = need_series(jwc, "price", T, "costs for " + wid);
                found = true;
                break;
            }
        if (!found) throw ReferenceError("costs reference unknown well id '" + wid + "'");
    }
    for (auto& w : c.gas.wells)
        if (w.price.empty()) throw SchemaError("costs: no price entry for well '" + w.id + "'");
    for (const auto& jsc : need(jco, "storages", "costs")) {
        const std::string sid = need_str(jsc, "id", "costs.storages");
        bool found = false;
        for (auto& s : c.gas.storages)
            if (s.id == sid) {
                s.price = need_series(jsc, "price", T, "costs for " + sid);
                found = true;
                break;
            }
        if (!found) throw ReferenceError("costs reference unknown storage id '" + sid + "'");
    }
    for (auto& s : c.gas.storages)
        if (s.price.empty()) throw SchemaError("costs: no price entry for storage '" + s.id + "'");

    // --- maintenance -----------------------------------------------------------
    for (const auto& jt : need(j, "maintenance", "maintenance")) {
        MaintenanceTask t;
        const std::string owner = need_str(jt, "owner", "maintenance");
        if (owner == "power")
            t.owner = Owner::Power;
        else if (owner == "gas")
            t.owner = Owner::Gas;
        else
            throw SchemaError("maintenance: owner must be 'power' or 'gas'");
        const std::string kind = need_str(jt, "kind", "maintenance");
        if (kind == "line")
            t.kind = AssetKind::Line;
        else if (kind == "generator")
            t.kind = AssetKind::Generator;
        else if (kind == "pipeline")
            t.kind = AssetKind::Pipeline;
        else
            throw SchemaError("maintenance: kind must be line, generator or pipeline");
        t.asset_id = need_str(jt, "asset", "maintenance");
        t.duration = need_int(jt, "duration", "maintenance " + t.asset_id);
        t.cost_per_period = need_num(jt, "cost_per_period", "maintenance " + t.asset_id);

        if (t.owner == Owner::Power && t.kind == AssetKind::Pipeline)
            throw SchemaError("maintenance: power owner cannot maintain pipeline '" + t.asset_id + "'");
        if (t.owner == Owner::Gas && t.kind != AssetKind::Pipeline)
            throw SchemaError("maintenance: gas owner can only maintain pipelines");

        const int task_idx = static_cast<int>(c.tasks.size());
        if (t.kind == AssetKind::Line) {
            bool found = false;
            for (size_t i = 0; i < c.power.lines.size(); ++i)
                if (c.power.lines[i].id == t.asset_id) {
                    if (c.power.lines[i].task >= 0)
                        throw SchemaError("maintenance: duplicate task for line '" + t.asset_id + "'");
                    c.power.lines[i].task = task_idx;
                    c.maintainable_lines.push_back(static_cast<int>(i));
                    found = true;
                    break;
                }
            if (!found) throw ReferenceError("maintenance references unknown line '" + t.asset_id + "'");
        } else if (t.kind == AssetKind::Generator) {
            bool found = false;
            for (size_t i = 0; i < c.power.generators.size(); ++i)
                if (c.power.generators[i].id == t.asset_id) {
                    if (c.power.generators[i].task >= 0)
                        throw SchemaError("maintenance: duplicate task for generator '" + t.asset_id +
                                          "'");
                    c.power.generators[i].task = task_idx;
                    c.maintainable_gens.push_back(static_cast<int>(i));
                    found = true;
                    break;
                }
            if (!found)
                throw ReferenceError("maintenance references unknown generator '" + t.asset_id + "'");
        } else {
            bool found = false;
            for (size_t i = 0; i < c.gas.pipelines.size(); ++i)
                if (c.gas.pipelines[i].id == t.asset_id) {
                    if (c.gas.pipelines[i].task >= 0)
                        throw SchemaError("maintenance: duplicate task for pipeline '" + t.asset_id +
                                          "'");
                    c.gas.pipelines[i].task = task_idx;
                    c.maintainable_pipes.push_back(static_cast<int>(i));
                    found = true;
                    break;
                }
            if (!found)
                throw ReferenceError("maintenance references unknown pipeline '" + t.asset_id + "'");
        }
        if (t.owner == Owner::Power)
            c.power_tasks.push_back(task_idx);
        else
            c.gas_tasks.push_back(task_idx);
        c.tasks.push_back(std::move(t));
    }

    // --- caps ------------------------------------------------------------------
    const auto& jcaps = need(j, "caps", "caps");
    c.caps.max_lines = need_int_series(jcaps, "max_lines_per_period", T, "caps");
    c.caps.max_gens = need_int_series(jcaps, "max_gens_per_period", T, "caps");
    c.caps.max_pipes = need_int_series(jcaps, "max_pipes_per_period", T, "caps");

    return c;
}

CaseData load_case(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open case file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_case_text(buf.str());
}

std::string write_case(const CaseData& c) {
    ordered_json j;
    j["horizon"] = {{"num_periods", c.horizon.num_periods}, {"period_label", c.horizon.period_label}};

    ordered_json jp;
    jp["buses"] = c.power.buses;
    ordered_json lines = ordered_json::array();
    for (const auto& l : c.power.lines) {
        ordered_json jl;
        jl["id"] = l.id;
        jl["from"] = c.power.buses[static_cast<size_t>(l.from_bus)];
        jl["to"] = c.power.buses[static_cast<size_t>(l.to_bus)];
        jl["susceptance"] = l.susceptance;
        jl["capacity"] = l.capacity;
        lines.push_back(std::move(jl));
    }
    jp["lines"] = std::move(lines);
    ordered_json gens = ordered_json::array();
    for (const auto& g : c.power.generators) {
        ordered_json jg;
        jg["id"] = g.id;
        jg["bus"] = c.power.buses[static_cast<size_t>(g.bus)];
        jg["p_min"] = g.p_min;
        jg["p_max"] = g.p_max;
        jg["ramp_up"] = g.ramp_up;
        jg["ramp_down"] = g.ramp_down;
        jg["min_on"] = g.min_on;
        jg["min_off"] = g.min_off;
        gens.push_back(std::move(jg));
    }
    jp["generators"] = std::move(gens);
    jp["load"] = matrix_json(c.power.load);
    ordered_json ab = ordered_json::array();
    for (size_t b = 0; b < c.power.buses.size(); ++b)
        ab.push_back(ordered_json::array({c.power.angle_min[b], c.power.angle_max[b]}));
    jp["angle_bounds"] = std::move(ab);
    jp["angle_diff_limit"] = c.power.angle_diff_limit;
    j["power"] = std::move(jp);

    ordered_json jg;
    jg["nodes"] = c.gas.nodes;
    ordered_json pipes = ordered_json::array();
    for (const auto& p : c.gas.pipelines) {
        ordered_json jpl;
        jpl["id"] = p.id;
        jpl["from"] = c.gas.nodes[static_cast<size_t>(p.from_node)];
        jpl["to"] = c.gas.nodes[static_cast<size_t>(p.to_node)];
        jpl["weymouth_c"] = p.weymouth_c;
        jpl["flow_cap"] = p.flow_cap;
        if (p.compressor) jpl["compressor_factor"] = *p.compressor;
        pipes.push_back(std::move(jpl));
    }
    jg["pipelines"] = std::move(pipes);
    ordered_json wells = ordered_json::array();
    for (const auto& w : c.gas.wells) {
        ordered_json jw;
        jw["id"] = w.id;
        jw["node"] = c.gas.nodes[static_cast<size_t>(w.node)];
        jw["g_min"] = w.g_min;
        jw["g_max"] = w.g_max;
        jw["min_on"] = w.min_on;
        jw["min_off"] = w.min_off;
        wells.push_back(std::move(jw));
    }
    jg["wells"] = std::move(wells);
    ordered_json stors = ordered_json::array();
    for (const auto& s : c.gas.storages) {
        ordered_json js;
        js["id"] = s.id;
        js["node"] = c.gas.nodes[static_cast<size_t>(s.node)];
        js["inv_min"] = s.inv_min;
        js["inv_max"] = s.inv_max;
        js["rate_out_max"] = s.rate_out_max;
        js["rate_in_max"] = s.rate_in_max;
        js["initial_inventory"] = s.initial_inventory;
        stors.push_back(std::move(js));
    }
    jg["storages"] = std::move(stors);
    jg["load"] = matrix_json(c.gas.load);
    ordered_json pb = ordered_json::array();
    for (size_t n = 0; n < c.gas.nodes.size(); ++n)
        pb.push_back(ordered_json::array({c.gas.pr_min[n], c.gas.pr_max[n]}));
    jg["sq_pressure_bounds"] = std::move(pb);
    j["gas"] = std::move(jg);

    ordered_json coup = ordered_json::array();
    for (const auto& g : c.power.generators)
        if (g.gas_link) {
            ordered_json jc;
            jc["generator"] = g.id;
            jc["gas_node"] = c.gas.nodes[static_cast<size_t>(g.gas_link->gas_node)];
            jc["efficiency"] = g.gas_link->efficiency;
            coup.push_back(std::move(jc));
        }
    j["coupling"] = std::move(coup);

    ordered_json jco;
    jco["power_shed"] = matrix_json(c.power.shed_cost);
    jco["gas_shed"] = matrix_json(c.gas.shed_cost);
    ordered_json gcosts = ordered_json::array();
    for (const auto& g : c.power.generators) {
        ordered_json jgc;
        jgc["id"] = g.id;
        jgc["fixed"] = series_json(g.fixed_cost);
        jgc["linear"] = series_json(g.linear_cost);
        jgc["startup"] = series_json(g.startup_cost);
        jgc["energy_price"] = series_json(g.energy_price);
        gcosts.push_back(std::move(jgc));
    }
    jco["generators"] = std::move(gcosts);
    ordered_json wcosts = ordered_json::array();
    for (const auto& w : c.gas.wells) {
        ordered_json jwc;
        jwc["id"] = w.id;
        jwc["price"] = series_json(w.price);
        wcosts.push_back(std::move(jwc));
    }
    jco["wells"] = std::move(wcosts);
    ordered_json scosts = ordered_json::array();
    for (const auto& s : c.gas.storages) {
        ordered_json jsc;
        jsc["id"] = s.id;
        jsc["price"] = series_json(s.price);
        scosts.push_back(std::move(jsc));
    }
    jco["storages"] = std::move(scosts);
    j["costs"] = std::move(jco);

    ordered_json jt = ordered_json::array();
    for (const auto& t : c.tasks) {
        ordered_json tt;
        tt["owner"] = to_string(t.owner);
        tt["kind"] = to_string(t.kind);
        tt["asset"] = t.asset_id;
        tt["duration"] = t.duration;
        tt["cost_per_period"] = t.cost_per_period;
        jt.push_back(std::move(tt));
    }
    j["maintenance"] = std::move(jt);

    ordered_json jcaps;
    jcaps["max_lines_per_period"] = int_series_json(c.caps.max_lines);
    jcaps["max_gens_per_period"] = int_series_json(c.caps.max_gens);
    jcaps["max_pipes_per_period"] = int_series_json(c.caps.max_pipes);
    j["caps"] = std::move(jcaps);

    return j.dump(2) + "\n";
}

std::vector<std::string> validate_case(const CaseData& c) {
    std::vector<std::string> v;
    auto bad = [&](const std::string& msg) { v.push_back(msg); };
    const int T = c.horizon.num_periods;

    if (T < 1) bad("horizon: num_periods must be >= 1");

    for (size_t b = 0; b < c.power.buses.size(); ++b)
        for (int t = 0; t < T; ++t) {
            if (c.power.load[b][t] < 0)
                bad("power load negative at bus " + c.power.buses[b] + " period " +
                    std::to_string(t + 1));
            if (c.power.shed_cost[b][t] < 0)
                bad("power shed cost negative at bus " + c.power.buses[b] + " period " +
                    std::to_string(t + 1));
        }
    for (const auto& l : c.power.lines) {
        if (!(l.susceptance > 0)) bad("line " + l.id + ": susceptance must be > 0");
        if (!(l.capacity > 0)) bad("line " + l.id + ": capacity must be > 0");
    }
    for (const auto& g : c.power.generators) {
        if (!(g.p_min >= 0 && g.p_min <= g.p_max))
            bad("generator " + g.id + ": requires 0 <= p_min <= p_max");
        if (!(g.ramp_up > 0 && g.ramp_down > 0)) bad("generator " + g.id + ": ramp rates must be > 0");
        if (g.gas_link && !(g.gas_link->efficiency > 0))
            bad("generator " + g.id + ": gas-link efficiency must be > 0");
    }

    for (size_t n = 0; n < c.gas.nodes.size(); ++n) {
        for (int t = 0; t < T; ++t) {
            if (c.gas.load[n][t] < 0)
                bad("gas load negative at node " + c.gas.nodes[n] + " period " + std::to_string(t + 1));
            if (c.gas.shed_cost[n][t] < 0)
                bad("gas shed cost negative at node " + c.gas.nodes[n] + " period " +
                    std::to_string(t + 1));
        }
        if (!(c.gas.pr_min[n] >= 0)) bad("node " + c.gas.nodes[n] + ": min squared pressure < 0");
        if (!(c.gas.pr_min[n] < c.gas.pr_max[n]))
            bad("node " + c.gas.nodes[n] + ": requires pressure_min < pressure_max");
    }
    for (const auto& p : c.gas.pipelines) {
        if (!(p.weymouth_c > 0)) bad("pipeline " + p.id + ": weymouth_c must be > 0");
        if (!(p.flow_cap > 0)) bad("pipeline " + p.id + ": flow_cap must be > 0");
        if (p.compressor && !(*p.compressor >= 1.0))
            bad("pipeline " + p.id + ": compressor factor must be >= 1");
    }
    for (const auto& w : c.gas.wells)
        if (!(w.g_min >= 0 && w.g_min <= w.g_max))
            bad("well " + w.id + ": requires 0 <= g_min <= g_max");
    for (const auto& s : c.gas.storages)
        if (!(s.inv_min <= s.initial_inventory && s.initial_inventory <= s.inv_max))
            bad("storage " + s.id + ": initial inventory outside [inv_min, inv_max]");

    for (const auto& t : c.tasks) {
        if (t.duration < 1 || t.duration > T)
            bad("maintenance on " + t.asset_id + ": duration " + std::to_string(t.duration) +
                " outside [1, " + std::to_string(T) + "]");
        if (t.cost_per_period < 0) bad("maintenance on " + t.asset_id + ": negative cost");
    }
    for (int x : c.caps.max_lines)
        if (x < 0) {
            bad("caps: max_lines_per_period must be >= 0");
            break;
        }
    for (int x : c.caps.max_gens)
        if (x < 0) {
            bad("caps: max_gens_per_period must be >= 0");
            break;
        }
    for (int x : c.caps.max_pipes)
        if (x < 0) {
            bad("caps: max_pipes_per_period must be >= 0");
            break;
        }
    return v;
}

BigMSet derive_big_m(const CaseData& c) {
    if (c.power.angle_min.empty() || c.power.angle_max.empty())
        throw InvalidCase("derive_big_m: missing angle bounds");
    BigMSet m;
    double lo = c.power.angle_min[0], hi = c.power.angle_max[0];
    for (size_t b = 0; b < c.power.buses.size(); ++b) {
        lo = std::min(lo, c.power.angle_min[b]);
        hi = std::max(hi, c.power.angle_max[b]);
    }
    m.m_angle = hi - lo;

    m.m_line = 0.0;
    for (int li : c.maintainable_lines) {
        const Line& l = c.power.lines[static_cast<size_t>(li)];
        m.m_line = std::max(m.m_line, l.susceptance * m.m_angle + l.capacity);
    }

    m.m_pipe = 0.0;
    for (int pi : c.maintainable_pipes) {
        const Pipeline& p = c.gas.pipelines[static_cast<size_t>(pi)];
        const double spread =
            c.gas.pr_max[static_cast<size_t>(p.from_node)] - c.gas.pr_min[static_cast<size_t>(p.to_node)];
        const double spread2 =
            c.gas.pr_max[static_cast<size_t>(p.to_node)] - c.gas.pr_min[static_cast<size_t>(p.from_node)];
        const double chord_max = p.flow_cap * p.flow_cap;  // |g| at the domain edge
        m.m_pipe = std::max(m.m_pipe, p.weymouth_c * p.weymouth_c * std::max(spread, spread2) +
                                          chord_max);
    }
    return m;
}

}  // namespace gridgame
