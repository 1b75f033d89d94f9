#pragma once

// Independent LP oracle for small instances: enumerates every candidate active
// set of n constraints among the rows and finite bounds, solves the square
// system, and keeps the best feasible vertex. Brute geometry, no simplex
// machinery shared with the library solver.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "gridgame/milp.hpp"

namespace oracle {

struct Result {
    bool feasible = false;
    double objective = std::numeric_limits<double>::infinity();
    std::vector<double> x;
};

namespace detail {

// In-place Gaussian elimination with partial pivoting; returns false if the
// system is numerically singular.
inline bool solve_square(std::vector<std::vector<double>> A, std::vector<double> rhs,
                         std::vector<double>& out) {
    const int n = static_cast<int>(rhs.size());
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
        if (std::abs(A[piv][k]) < 1e-9) return false;
        std::swap(A[piv], A[k]);
        std::swap(rhs[piv], rhs[k]);
        for (int i = k + 1; i < n; ++i) {
            const double f = A[i][k] / A[k][k];
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j) A[i][j] -= f * A[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    out.assign(n, 0.0);
    for (int k = n - 1; k >= 0; --k) {
        double v = rhs[k];
        for (int j = k + 1; j < n; ++j) v -= A[k][j] * out[j];
        out[k] = v / A[k][k];
    }
    return true;
}

}  // namespace detail

inline Result solve(const gridgame::MilpModel& m) {
    using gridgame::RowSense;
    const int n = m.num_vars();

    // Candidate tight constraints: (coefficient row, rhs).
    std::vector<std::vector<double>> crow;
    std::vector<double> crhs;
    for (int i = 0; i < m.num_rows(); ++i) {
        std::vector<double> a(n, 0.0);
        for (const auto& t : m.row(i).terms) a[t.var] += t.coef;
        crow.push_back(std::move(a));
        crhs.push_back(m.row(i).rhs);
    }
    for (int j = 0; j < n; ++j) {
        if (m.var(j).lower > -std::numeric_limits<double>::infinity()) {
            std::vector<double> a(n, 0.0);
            a[j] = 1.0;
            crow.push_back(std::move(a));
            crhs.push_back(m.var(j).lower);
        }
        if (m.var(j).upper < std::numeric_limits<double>::infinity()) {
            std::vector<double> a(n, 0.0);
            a[j] = 1.0;
            crow.push_back(std::move(a));
            crhs.push_back(m.var(j).upper);
        }
    }
    const int total = static_cast<int>(crow.size());

    Result best;
    std::vector<int> pick;

    auto feasible_point = [&](const std::vector<double>& x) {
        constexpr double tol = 1e-7;
        for (int j = 0; j < n; ++j) {
            if (x[j] < m.var(j).lower - tol) return false;
            if (x[j] > m.var(j).upper + tol) return false;
        }
        for (int i = 0; i < m.num_rows(); ++i) {
            const double act = m.row_activity(i, x);
            switch (m.row(i).sense) {
                case RowSense::LE:
                    if (act > m.row(i).rhs + tol) return false;
                    break;
                case RowSense::GE:
                    if (act < m.row(i).rhs - tol) return false;
                    break;
                case RowSense::EQ:
                    if (std::abs(act - m.row(i).rhs) > tol) return false;
                    break;
            }
        }
        return true;
    };

    auto consider = [&]() {
        std::vector<std::vector<double>> A;
        std::vector<double> rhs;
        for (int idx : pick) {
            A.push_back(crow[idx]);
            rhs.push_back(crhs[idx]);
        }
        std::vector<double> x;
        if (!detail::solve_square(std::move(A), std::move(rhs), x)) return;
        if (!feasible_point(x)) return;
        const double obj = m.objective_value(x);
        if (!best.feasible || obj < best.objective) {
            best.feasible = true;
            best.objective = obj;
            best.x = x;
        }
    };

    // Enumerate all n-subsets of the candidate constraints.
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            consider();
            return;
        }
        for (int i = start; i <= total - (n - depth); ++i) {
            pick.push_back(i);
            rec(i + 1, depth + 1);
            pick.pop_back();
        }
    };
    if (n <= total) rec(0, 0);
    return best;
}

}  // namespace oracle
