#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gridgame {

enum class VarKind { Continuous, Binary };
enum class RowSense { LE, EQ, GE };

struct ModelVar {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lower = 0.0;
    double upper = 0.0;
};

struct RowTerm {
    int var = -1;
    double coef = 0.0;
};

struct ModelRow {
    std::string name;
    RowSense sense = RowSense::LE;
    double rhs = 0.0;
    std::vector<RowTerm> terms;
};

/// Generic bounded-variable linear minimization model with binaries.
/// Variable and row ids are dense indices assigned in insertion order; the
/// variable names double as the map back to domain quantities.
class MilpModel {
  public:
    int add_var(std::string name, VarKind kind, double lower, double upper);
    int add_row(std::string name, RowSense sense, double rhs, std::vector<RowTerm> terms);
    void add_obj(int var, double coef);

    int num_vars() const { return static_cast<int>(vars_.size()); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_binaries() const;

    const ModelVar& var(int j) const { return vars_[static_cast<size_t>(j)]; }
    const ModelRow& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    const std::vector<ModelVar>& vars() const { return vars_; }
    const std::vector<ModelRow>& rows() const { return rows_; }
    const std::vector<RowTerm>& objective() const { return objective_; }

    int find_var(const std::string& name) const;  // -1 if absent

    /// Throws ModelError on dangling references, reversed bounds or binaries
    /// whose bounds are not exactly {0,1}.
    void validate() const;

    double objective_value(const std::vector<double>& x) const;
    double row_activity(int i, const std::vector<double>& x) const;

    /// Largest violation of any row or bound by x (replay audit).
    double max_violation(const std::vector<double>& x) const;

  private:
    std::vector<ModelVar> vars_;
    std::vector<ModelRow> rows_;
    std::vector<RowTerm> objective_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, LimitReached };

const char* to_string(SolveStatus s);

struct SolveStats {
    std::int64_t nodes = 0;
    std::int64_t simplex_iterations = 0;
    double wall_seconds = 0.0;
};

struct MilpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> values;  // indexed by variable id
    double objective = 0.0;
    SolveStats stats;
};

// Plain-text model dump (the `--dump-lp` format). Byte-stable: fixed token
// order, "\n" line ends, 17-significant-digit floats.
void write_model_dump(const MilpModel& model, std::ostream& out);
std::string model_dump(const MilpModel& model);
MilpModel read_model_dump(std::istream& in);

}  // namespace gridgame
