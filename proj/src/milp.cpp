#include "gridgame/milp.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "gridgame/errors.hpp"
#include "gridgame/numfmt.hpp"

namespace gridgame {

int MilpModel::add_var(std::string name, VarKind kind, double lower, double upper) {
    vars_.push_back(ModelVar{std::move(name), kind, lower, upper});
    return static_cast<int>(vars_.size()) - 1;
}

int MilpModel::add_row(std::string name, RowSense sense, double rhs, std::vector<RowTerm> terms) {
    rows_.push_back(ModelRow{std::move(name), sense, rhs, std::move(terms)});
    return static_cast<int>(rows_.size()) - 1;
}

void MilpModel::add_obj(int var, double coef) {
    objective_.push_back(RowTerm{var, coef});
}

int MilpModel::num_binaries() const {
    int n = 0;
    for (const auto& v : vars_)
        if (v.kind == VarKind::Binary) ++n;
    return n;
}

int MilpModel::find_var(const std::string& name) const {
    for (size_t j = 0; j < vars_.size(); ++j)
        if (vars_[j].name == name) return static_cast<int>(j);
    return -1;
}

void MilpModel::validate() const {
    const int n = num_vars();
    for (int j = 0; j < n; ++j) {
        const auto& v = vars_[static_cast<size_t>(j)];
        if (v.lower > v.upper)
            throw ModelError("variable " + v.name + ": lower bound exceeds upper bound");
        if (v.kind == VarKind::Binary && (v.lower != 0.0 || v.upper != 1.0))
            throw ModelError("binary variable " + v.name + " must have bounds {0,1}");
    }
    auto check_terms = [&](const std::vector<RowTerm>& terms, const std::string& where) {
        for (const auto& t : terms) {
            if (t.var < 0 || t.var >= n)
                throw ModelError(where + " references undeclared variable index " +
                                 std::to_string(t.var));
            if (!std::isfinite(t.coef))
                throw ModelError(where + " has non-finite coefficient");
        }
    };
    for (const auto& r : rows_) {
        check_terms(r.terms, "row " + r.name);
        if (!std::isfinite(r.rhs)) throw ModelError("row " + r.name + " has non-finite rhs");
    }
    check_terms(objective_, "objective");
}

double MilpModel::objective_value(const std::vector<double>& x) const {
    double v = 0.0;
    for (const auto& t : objective_) v += t.coef * x[static_cast<size_t>(t.var)];
    return v;
}

double MilpModel::row_activity(int i, const std::vector<double>& x) const {
    double v = 0.0;
    for (const auto& t : rows_[static_cast<size_t>(i)].terms)
        v += t.coef * x[static_cast<size_t>(t.var)];
    return v;
}

double MilpModel::max_violation(const std::vector<double>& x) const {
    double worst = 0.0;
    for (int j = 0; j < num_vars(); ++j) {
        const auto& v = vars_[static_cast<size_t>(j)];
        worst = std::max(worst, v.lower - x[static_cast<size_t>(j)]);
        worst = std::max(worst, x[static_cast<size_t>(j)] - v.upper);
    }
    for (int i = 0; i < num_rows(); ++i) {
        const double a = row_activity(i, x);
        const auto& r = rows_[static_cast<size_t>(i)];
        switch (r.sense) {
            case RowSense::LE: worst = std::max(worst, a - r.rhs); break;
            case RowSense::GE: worst = std::max(worst, r.rhs - a); break;
            case RowSense::EQ: worst = std::max(worst, std::abs(a - r.rhs)); break;
        }
    }
    return worst;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::Infeasible: return "Infeasible";
        case SolveStatus::Unbounded: return "Unbounded";
        case SolveStatus::LimitReached: return "LimitReached";
    }
    return "?";
}

namespace {

const char* sense_token(RowSense s) {
    switch (s) {
        case RowSense::LE: return "LE";
        case RowSense::EQ: return "EQ";
        case RowSense::GE: return "GE";
    }
    return "?";
}

RowSense parse_sense(const std::string& tok) {
    if (tok == "LE") return RowSense::LE;
    if (tok == "EQ") return RowSense::EQ;
    if (tok == "GE") return RowSense::GE;
    throw ParseError("model dump: bad sense token '" + tok + "'");
}

}  // namespace

void write_model_dump(const MilpModel& model, std::ostream& out) {
    out << "MILPDUMP 1\n";
    out << "vars " << model.num_vars() << "\n";
    for (int j = 0; j < model.num_vars(); ++j) {
        const auto& v = model.var(j);
        out << j << " " << v.name << " " << (v.kind == VarKind::Binary ? "B" : "C") << " "
            << fmt_double(v.lower) << " " << fmt_double(v.upper) << "\n";
    }
    out << "rows " << model.num_rows() << "\n";
    for (int i = 0; i < model.num_rows(); ++i) {
        const auto& r = model.row(i);
        out << i << " " << r.name << " " << sense_token(r.sense) << " " << fmt_double(r.rhs) << " "
            << r.terms.size();
        for (const auto& t : r.terms) out << " " << t.var << " " << fmt_double(t.coef);
        out << "\n";
    }
    out << "obj " << model.objective().size();
    for (const auto& t : model.objective()) out << " " << t.var << " " << fmt_double(t.coef);
    out << "\nend\n";
}

std::string model_dump(const MilpModel& model) {
    std::ostringstream os;
    write_model_dump(model, os);
    return os.str();
}

MilpModel read_model_dump(std::istream& in) {
    MilpModel model;
    std::string tok;
    int version = 0;
    if (!(in >> tok >> version) || tok != "MILPDUMP" || version != 1)
        throw ParseError("model dump: missing MILPDUMP 1 header");
    int nvars = 0;
    if (!(in >> tok >> nvars) || tok != "vars") throw ParseError("model dump: missing vars section");
    for (int j = 0; j < nvars; ++j) {
        int id;
        std::string name, kind, lo, hi;
        if (!(in >> id >> name >> kind >> lo >> hi) || id != j)
            throw ParseError("model dump: bad variable record");
        model.add_var(name, kind == "B" ? VarKind::Binary : VarKind::Continuous, parse_double(lo),
                      parse_double(hi));
    }
    int nrows = 0;
    if (!(in >> tok >> nrows) || tok != "rows") throw ParseError("model dump: missing rows section");
    for (int i = 0; i < nrows; ++i) {
        int id, nnz;
        std::string name, sense, rhs;
        if (!(in >> id >> name >> sense >> rhs >> nnz) || id != i)
            throw ParseError("model dump: bad row record");
        std::vector<RowTerm> terms;
        terms.reserve(static_cast<size_t>(nnz));
        for (int k = 0; k < nnz; ++k) {
            int var;
            std::string coef;
            if (!(in >> var >> coef)) throw ParseError("model dump: truncated row terms");
            terms.push_back(RowTerm{var, parse_double(coef)});
        }
        model.add_row(name, parse_sense(sense), parse_double(rhs), std::move(terms));
    }
    int nobj = 0;
    if (!(in >> tok >> nobj) || tok != "obj") throw ParseError("model dump: missing obj section");
    for (int k = 0; k < nobj; ++k) {
        int var;
        std::string coef;
        if (!(in >> var >> coef)) throw ParseError("model dump: truncated objective");
        model.add_obj(var, parse_double(coef));
    }
    if (!(in >> tok) || tok != "end") throw ParseError("model dump: missing end marker");
    model.validate();
    return model;
}

}  // namespace gridgame
