#pragma once

// Seeded random LP/MILP generators for the solver oracle suites. Instances are
// feasible by construction: a reference point inside the boxes is drawn first
// and every row's rhs leaves it feasible. Randomness avoids
// std::uniform_real_distribution (implementation-defined) so the fixtures are
// identical on every platform.

#include <cstdint>
#include <random>
#include <string>

#include "gridgame/milp.hpp"

namespace testsupport {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

inline gridgame::MilpModel random_lp(std::uint64_t seed) {
    using namespace gridgame;
    Rng rng(seed);
    const int n = rng.uniform_int(2, 6);
    const int m = rng.uniform_int(1, 5);

    MilpModel model;
    std::vector<double> x0;
    for (int j = 0; j < n; ++j) {
        const double lo = rng.uniform(-4.0, 0.0);
        const double hi = lo + rng.uniform(0.5, 6.0);
        model.add_var("x" + std::to_string(j), VarKind::Continuous, lo, hi);
        model.add_obj(j, rng.uniform(-3.0, 3.0));
        x0.push_back(rng.uniform(lo, hi));
    }
    for (int i = 0; i < m; ++i) {
        std::vector<RowTerm> terms;
        double act = 0.0;
        for (int j = 0; j < n; ++j) {
            if (rng.uniform(0.0, 1.0) < 0.2) continue;
            const double coef = rng.uniform(-2.0, 2.0);
            terms.push_back(RowTerm{j, coef});
            act += coef * x0[static_cast<size_t>(j)];
        }
        if (terms.empty()) terms.push_back(RowTerm{0, 1.0}), act = x0[0];
        const int sense = rng.uniform_int(0, 2);
        if (sense == 0)
            model.add_row("r" + std::to_string(i), RowSense::LE, act + rng.uniform(0.05, 2.0),
                          std::move(terms));
        else if (sense == 1)
            model.add_row("r" + std::to_string(i), RowSense::GE, act - rng.uniform(0.05, 2.0),
                          std::move(terms));
        else
            model.add_row("r" + std::to_string(i), RowSense::EQ, act, std::move(terms));
    }
    return model;
}

inline gridgame::MilpModel random_milp(std::uint64_t seed) {
    using namespace gridgame;
    Rng rng(seed);
    const int nb = rng.uniform_int(1, 10);
    const int nc = rng.uniform_int(1, 20);
    const int n = nb + nc;
    const int m = rng.uniform_int(2, 12);

    MilpModel model;
    std::vector<double> x0;
    for (int j = 0; j < nb; ++j) {
        model.add_var("b" + std::to_string(j), VarKind::Binary, 0.0, 1.0);
        model.add_obj(j, rng.uniform(-3.0, 3.0));
        x0.push_back(static_cast<double>(rng.uniform_int(0, 1)));
    }
    for (int j = 0; j < nc; ++j) {
        const double lo = rng.uniform(-4.0, 0.0);
        const double hi = lo + rng.uniform(0.5, 6.0);
        model.add_var("x" + std::to_string(j), VarKind::Continuous, lo, hi);
        model.add_obj(nb + j, rng.uniform(-3.0, 3.0));
        x0.push_back(rng.uniform(lo, hi));
    }
    for (int i = 0; i < m; ++i) {
        std::vector<RowTerm> terms;
        double act = 0.0;
        for (int j = 0; j < n; ++j) {
            if (rng.uniform(0.0, 1.0) < 0.5) continue;
            const double coef = rng.uniform(-2.0, 2.0);
            terms.push_back(RowTerm{j, coef});
            act += coef * x0[static_cast<size_t>(j)];
        }
        if (terms.empty()) terms.push_back(RowTerm{0, 1.0}), act = x0[0];
        const int sense = rng.uniform_int(0, 1);
        if (sense == 0)
            model.add_row("r" + std::to_string(i), RowSense::LE, act + rng.uniform(0.05, 2.0),
                          std::move(terms));
        else
            model.add_row("r" + std::to_string(i), RowSense::GE, act - rng.uniform(0.05, 2.0),
                          std::move(terms));
    }
    return model;
}

}  // namespace testsupport
