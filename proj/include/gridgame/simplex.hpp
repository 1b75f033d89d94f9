#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gridgame/milp.hpp"

namespace gridgame {

// Column status. Columns are the model's structural variables followed by one
// logical (slack) column per row.
enum class ColStatus : std::int8_t {
    NonbasicLower = 0,
    NonbasicUpper = 1,
    Basic = 2,
    NonbasicFree = 3,
};

struct Basis {
    std::vector<std::int8_t> status;  // one per column
    std::vector<std::int32_t> basic;  // basic column per row position
    bool empty() const { return status.empty(); }
};

struct LpResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> x;       // structural values only
    double objective = 0.0;
    double dual_bound = 0.0;     // from the final basis; equals objective at optimum
    std::int64_t iterations = 0;
};

struct SimplexOptions {
    double feas_tol = 1e-7;
    double opt_tol = 1e-9;
    double pivot_tol = 1e-9;
    int refactor_interval = 100;
    std::int64_t max_iterations = 5'000'000;
};

/// Bounded-variable revised primal simplex (two-phase) with a sparse LU of the
/// basis and product-form eta updates between periodic refactorizations.
/// Pricing is Dantzig with lowest-index tie break; after a run of degenerate
/// pivots it falls back to Bland's rule until progress resumes, which keeps the
/// method finite and the pivot sequence deterministic.
///
/// One instance per model. Binaries are treated as continuous columns with the
/// current working bounds; branch & bound drives them via set_bounds().
class BoundedSimplex {
  public:
    explicit BoundedSimplex(const MilpModel& model, SimplexOptions opts = {});
    ~BoundedSimplex();

    BoundedSimplex(const BoundedSimplex&) = delete;
    BoundedSimplex& operator=(const BoundedSimplex&) = delete;

    void set_bounds(int var, double lower, double upper);
    void reset_bounds();

    /// Solves from the warm basis when given (falling back to the all-slack
    /// basis if it cannot be factorized), otherwise cold.
    LpResult solve(const Basis* warm = nullptr);

    Basis basis() const;

    int num_structural() const;
    std::int64_t total_iterations() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace gridgame
