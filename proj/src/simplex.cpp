#include "gridgame/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridgame/errors.hpp"

namespace gridgame {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDropTol = 1e-13;      // dropped from sparse factors / etas
constexpr double kZeroTol = 1e-12;
constexpr int kDegenerateStreak = 100;  // degenerate pivots before Bland mode

// Sparse LU of the basis with Markowitz pivoting and threshold partial
// pivoting. Factors are stored as an elimination replay (L multipliers per
// step) plus the pivot rows of U; solves walk the pivot sequence and skip
// steps whose working value is exactly zero, so sparse right-hand sides stay
// cheap without any symbolic analysis.
class SparseLu {
  public:
    void factor(int m, const std::vector<std::vector<std::pair<int, double>>>& cols) {
        m_ = m;
        piv_row_.assign(m, -1);
        piv_pos_.assign(m, -1);
        piv_val_.assign(m, 0.0);
        l_start_.assign(m + 1, 0);
        u_start_.assign(m + 1, 0);
        l_idx_.clear();
        l_val_.clear();
        u_pos_.clear();
        u_val_.clear();

        std::vector<std::vector<std::pair<int, double>>> w(cols);
        std::vector<int> rowcount(m, 0);
        std::vector<char> rowdone(m, 0), coldone(m, 0);
        std::vector<std::vector<int>> rowcols(m);
        for (int j = 0; j < m_; ++j)
            for (const auto& ent : w[j]) {
                ++rowcount[ent.first];
                rowcols[ent.first].push_back(j);
            }

        std::vector<double> acc(m, 0.0);
        std::vector<int> accstamp(m, -1);
        std::vector<std::pair<int, double>> lent;
        std::vector<std::pair<int, double>> newcol;

        for (int step = 0; step < m_; ++step) {
            long best_score = -1;
            int best_col = -1, best_row = -1;
            double best_val = 0.0;
            for (int j = 0; j < m_; ++j) {
                if (coldone[j]) continue;
                double colmax = 0.0;
                int live = 0;
                for (const auto& ent : w[j]) {
                    if (rowdone[ent.first]) continue;
                    ++live;
                    colmax = std::max(colmax, std::abs(ent.second));
                }
                if (live == 0 || colmax <= kDropTol) continue;
                int cand_row = -1;
                double cand_val = 0.0;
                long cand_rc = 0;
                for (const auto& ent : w[j]) {
                    if (rowdone[ent.first]) continue;
                    if (std::abs(ent.second) < 0.01 * colmax) continue;
                    const long rc = rowcount[ent.first];
                    if (cand_row < 0 || rc < cand_rc || (rc == cand_rc && ent.first < cand_row)) {
                        cand_row = ent.first;
                        cand_val = ent.second;
                        cand_rc = rc;
                    }
                }
                if (cand_row < 0) continue;
                const long score = (cand_rc - 1) * (static_cast<long>(live) - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_col = j;
                    best_row = cand_row;
                    best_val = cand_val;
                    if (best_score == 0) break;
                }
            }
            if (best_col < 0) throw NumericalError("singular basis in LU factorization");

            const int pr = best_row, pc = best_col;
            const double pv = best_val;
            piv_row_[step] = pr;
            piv_pos_[step] = pc;
            piv_val_[step] = pv;
            rowdone[pr] = 1;
            coldone[pc] = 1;

            lent.clear();
            for (const auto& ent : w[pc])
                if (!rowdone[ent.first]) lent.emplace_back(ent.first, ent.second / pv);
            w[pc].clear();

            for (int j : rowcols[pr]) {
                if (coldone[j] || w[j].empty()) continue;
                double u = 0.0;
                bool found = false;
                for (const auto& ent : w[j])
                    if (ent.first == pr) {
                        u = ent.second;
                        found = true;
                        break;
                    }
                if (!found) continue;
                if (std::abs(u) > kDropTol) {
                    u_pos_.push_back(j);
                    u_val_.push_back(u);
                }
                // col_j -= u * (pivot column / pv), and drop the pivot-row entry
                for (const auto& ent : w[j]) {
                    acc[ent.first] = ent.second;
                    accstamp[ent.first] = step;
                }
                for (const auto& le : lent) {
                    if (accstamp[le.first] == step)
                        acc[le.first] -= le.second * u;
                    else {
                        acc[le.first] = -le.second * u;
                        accstamp[le.first] = step;
                        ++rowcount[le.first];
                        rowcols[le.first].push_back(j);
                    }
                }
                newcol.clear();
                newcol.reserve(w[j].size() + lent.size());
                auto emit = [&](int i) {
                    if (accstamp[i] != step) return;
                    accstamp[i] = -1;
                    if (i == pr) {
                        --rowcount[i];
                        return;
                    }
                    if (std::abs(acc[i]) > kDropTol)
                        newcol.emplace_back(i, acc[i]);
                    else if (!rowdone[i])
                        --rowcount[i];
                };
                for (const auto& ent : w[j]) emit(ent.first);
                for (const auto& le : lent) emit(le.first);
                w[j].swap(newcol);
            }
            u_start_[step + 1] = static_cast<int>(u_pos_.size());

            for (const auto& le : lent) {
                l_idx_.push_back(le.first);
                l_val_.push_back(le.second);
            }
            l_start_[step + 1] = static_cast<int>(l_idx_.size());
        }
    }

    // w: dense rhs in row space (destroyed); out: by basis position.
    void solve(std::vector<double>& w, std::vector<double>& out) const {
        for (int k = 0; k < m_; ++k) {
            const double yr = w[piv_row_[k]];
            if (yr == 0.0) continue;
            for (int p = l_start_[k]; p < l_start_[k + 1]; ++p) w[l_idx_[p]] -= l_val_[p] * yr;
        }
        for (int k = m_ - 1; k >= 0; --k) {
            double val = w[piv_row_[k]];
            for (int p = u_start_[k]; p < u_start_[k + 1]; ++p) val -= u_val_[p] * out[u_pos_[p]];
            out[piv_pos_[k]] = val / piv_val_[k];
        }
    }

    // d: rhs by basis position (destroyed); out: y in row space, B^T y = d.
    void solve_transpose(std::vector<double>& d, std::vector<double>& out) const {
        for (int k = 0; k < m_; ++k) {
            const double sv = d[piv_pos_[k]] / piv_val_[k];
            d[piv_pos_[k]] = sv;
            if (sv == 0.0) continue;
            for (int p = u_start_[k]; p < u_start_[k + 1]; ++p) d[u_pos_[p]] -= u_val_[p] * sv;
        }
        std::fill(out.begin(), out.end(), 0.0);
        for (int k = 0; k < m_; ++k) out[piv_row_[k]] = d[piv_pos_[k]];
        for (int k = m_ - 1; k >= 0; --k) {
            double val = out[piv_row_[k]];
            for (int p = l_start_[k]; p < l_start_[k + 1]; ++p) {
                const double wv = out[l_idx_[p]];
                if (wv != 0.0) val -= l_val_[p] * wv;
            }
            out[piv_row_[k]] = val;
        }
    }

  private:
    int m_ = 0;
    std::vector<int> piv_row_, piv_pos_;
    std::vector<double> piv_val_;
    std::vector<int> l_start_, l_idx_;
    std::vector<double> l_val_;
    std::vector<int> u_start_, u_pos_;
    std::vector<double> u_val_;
};

struct Eta {
    int r = -1;
    double ar = 0.0;
    std::vector<std::pair<int, double>> entries;  // alpha_i for i != r
};

}  // namespace

struct BoundedSimplex::Impl {
    int n = 0, m = 0, ncols = 0;
    std::vector<int> colptr, rowidx;
    std::vector<double> aval;
    std::vector<double> b;
    std::vector<double> cost;
    std::vector<double> lb_model, ub_model;
    std::vector<double> lb, ub;
    SimplexOptions opts;

    std::vector<std::int8_t> status;
    std::vector<std::int32_t> basic;
    std::vector<std::int32_t> pos_of;
    std::vector<double> xval;
    SparseLu lu;
    std::vector<Eta> etas;
    std::int64_t total_iters = 0;

    std::vector<double> work_m, alpha, ydense, dwork;

    Impl(const MilpModel& mdl, SimplexOptions o) : opts(o) {
        mdl.validate();
        n = mdl.num_vars();
        m = mdl.num_rows();
        ncols = n + m;

        std::vector<int> counts(static_cast<size_t>(n), 0);
        for (const auto& r : mdl.rows())
            for (const auto& t : r.terms) ++counts[static_cast<size_t>(t.var)];
        colptr.assign(static_cast<size_t>(n) + 1, 0);
        for (int j = 0; j < n; ++j) colptr[j + 1] = colptr[j] + counts[j];
        rowidx.assign(static_cast<size_t>(colptr[n]), 0);
        aval.assign(static_cast<size_t>(colptr[n]), 0.0);
        std::vector<int> fill(colptr.begin(), colptr.end() - 1);
        b.assign(static_cast<size_t>(m), 0.0);
        for (int i = 0; i < m; ++i) {
            const auto& r = mdl.row(i);
            b[i] = r.rhs;
            for (const auto& t : r.terms) {
                rowidx[fill[t.var]] = i;
                aval[fill[t.var]] = t.coef;
                ++fill[t.var];
            }
        }
        // Merge duplicate entries within a column (zero slots are skipped later).
        for (int j = 0; j < n; ++j) {
            const int lo = colptr[j], hi = colptr[j + 1];
            if (hi - lo < 2) continue;
            std::vector<std::pair<int, double>> ents;
            ents.reserve(static_cast<size_t>(hi - lo));
            for (int p = lo; p < hi; ++p) ents.emplace_back(rowidx[p], aval[p]);
            std::sort(ents.begin(), ents.end(),
                      [](const auto& a, const auto& c) { return a.first < c.first; });
            int w = lo;
            for (const auto& e : ents) {
                if (w > lo && rowidx[w - 1] == e.first)
                    aval[w - 1] += e.second;
                else {
                    rowidx[w] = e.first;
                    aval[w] = e.second;
                    ++w;
                }
            }
            for (int p = w; p < hi; ++p) {
                rowidx[p] = ents.back().first;
                aval[p] = 0.0;
            }
        }

        cost.assign(static_cast<size_t>(ncols), 0.0);
        for (const auto& t : mdl.objective()) cost[static_cast<size_t>(t.var)] += t.coef;

        lb_model.assign(static_cast<size_t>(ncols), 0.0);
        ub_model.assign(static_cast<size_t>(ncols), 0.0);
        for (int j = 0; j < n; ++j) {
            lb_model[j] = mdl.var(j).lower;
            ub_model[j] = mdl.var(j).upper;
        }
        for (int i = 0; i < m; ++i) {
            switch (mdl.row(i).sense) {
                case RowSense::LE:
                    lb_model[n + i] = 0.0;
                    ub_model[n + i] = kInf;
                    break;
                case RowSense::GE:
                    lb_model[n + i] = -kInf;
                    ub_model[n + i] = 0.0;
                    break;
                case RowSense::EQ:
                    lb_model[n + i] = 0.0;
                    ub_model[n + i] = 0.0;
                    break;
            }
        }
        lb = lb_model;
        ub = ub_model;

        status.assign(static_cast<size_t>(ncols), 0);
        basic.assign(static_cast<size_t>(m), 0);
        pos_of.assign(static_cast<size_t>(ncols), -1);
        xval.assign(static_cast<size_t>(ncols), 0.0);
        work_m.assign(static_cast<size_t>(m), 0.0);
        alpha.assign(static_cast<size_t>(m), 0.0);
        ydense.assign(static_cast<size_t>(m), 0.0);
        dwork.assign(static_cast<size_t>(m), 0.0);
    }

    template <class F>
    void for_col(int j, F&& f) const {
        if (j < n) {
            for (int p = colptr[j]; p < colptr[j + 1]; ++p)
                if (aval[p] != 0.0) f(rowidx[p], aval[p]);
        } else {
            f(j - n, 1.0);
        }
    }

    double col_dot(int j, const std::vector<double>& y) const {
        if (j >= n) return y[j - n];
        double s = 0.0;
        for (int p = colptr[j]; p < colptr[j + 1]; ++p) s += aval[p] * y[rowidx[p]];
        return s;
    }

    ColStatus st(int j) const { return static_cast<ColStatus>(status[j]); }
    void set_st(int j, ColStatus s) { status[j] = static_cast<std::int8_t>(s); }

    void normalize_nonbasic(int j) {
        if (st(j) == ColStatus::Basic) return;
        if (lb[j] == -kInf && ub[j] == kInf) {
            set_st(j, ColStatus::NonbasicFree);
            xval[j] = 0.0;
            return;
        }
        if (st(j) == ColStatus::NonbasicUpper && ub[j] < kInf) {
            xval[j] = ub[j];
            return;
        }
        if (lb[j] > -kInf) {
            set_st(j, ColStatus::NonbasicLower);
            xval[j] = lb[j];
        } else {
            set_st(j, ColStatus::NonbasicUpper);
            xval[j] = ub[j];
        }
    }

    void slack_basis() {
        std::fill(pos_of.begin(), pos_of.end(), -1);
        for (int j = 0; j < ncols; ++j) {
            set_st(j, ColStatus::NonbasicLower);
            normalize_nonbasic(j);
        }
        for (int i = 0; i < m; ++i) {
            basic[i] = n + i;
            pos_of[n + i] = i;
            set_st(n + i, ColStatus::Basic);
        }
    }

    bool adopt(const Basis& w) {
        if (static_cast<int>(w.status.size()) != ncols || static_cast<int>(w.basic.size()) != m)
            return false;
        std::vector<char> isbasic(static_cast<size_t>(ncols), 0);
        for (int i = 0; i < m; ++i) {
            const int j = w.basic[i];
            if (j < 0 || j >= ncols || isbasic[j]) return false;
            if (static_cast<ColStatus>(w.status[j]) != ColStatus::Basic) return false;
            isbasic[j] = 1;
        }
        for (int j = 0; j < ncols; ++j)
            if (static_cast<ColStatus>(w.status[j]) == ColStatus::Basic && !isbasic[j])
                return false;
        status = w.status;
        basic = w.basic;
        std::fill(pos_of.begin(), pos_of.end(), -1);
        for (int i = 0; i < m; ++i) pos_of[basic[i]] = i;
        for (int j = 0; j < ncols; ++j) normalize_nonbasic(j);
        return true;
    }

    void refactorize() {
        std::vector<std::vector<std::pair<int, double>>> cols(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            auto& col = cols[i];
            for_col(basic[i], [&](int r, double v) { col.emplace_back(r, v); });
        }
        lu.factor(m, cols);
        etas.clear();
        recompute_basics();
    }

    void recompute_basics() {
        for (int i = 0; i < m; ++i) work_m[i] = b[i];
        for (int j = 0; j < ncols; ++j) {
            if (st(j) == ColStatus::Basic) continue;
            normalize_nonbasic(j);
            const double v = xval[j];
            if (v == 0.0) continue;
            for_col(j, [&](int r, double a) { work_m[r] -= a * v; });
        }
        ftran(work_m, alpha);
        for (int i = 0; i < m; ++i) xval[basic[i]] = alpha[i];
    }

    void ftran(std::vector<double>& w, std::vector<double>& out) {
        lu.solve(w, out);
        for (const Eta& e : etas) {
            const double dr = out[e.r] / e.ar;
            if (dr != 0.0)
                for (const auto& ent : e.entries) out[ent.first] -= ent.second * dr;
            out[e.r] = dr;
        }
    }

    void btran(std::vector<double>& d, std::vector<double>& out) {
        for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
            double s = d[it->r];
            for (const auto& ent : it->entries) s -= ent.second * d[ent.first];
            d[it->r] = s / it->ar;
        }
        lu.solve_transpose(d, out);
    }

    // Signed infeasibility of the basic variable at position pos (0 if within
    // bounds by the feasibility tolerance).
    double infeas(int pos) const {
        const int j = basic[pos];
        if (xval[j] < lb[j] - opts.feas_tol) return xval[j] - lb[j];
        if (xval[j] > ub[j] + opts.feas_tol) return xval[j] - ub[j];
        return 0.0;
    }

    double sum_infeas() const {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += std::abs(infeas(i));
        return s;
    }

    LpResult run(const Basis* warm) {
        bool adopted = warm != nullptr && !warm->empty() && adopt(*warm);
        if (!adopted) slack_basis();
        try {
            refactorize();
        } catch (const NumericalError&) {
            if (!adopted) throw;
            slack_basis();
            refactorize();
        }

        LpResult res;
        std::int64_t iters = 0;
        int degen_streak = 0;
        bool bland = false;
        int confirm = 0;

        auto finish = [&](SolveStatus s) {
            res.status = s;
            res.iterations = iters;
            res.x.assign(xval.begin(), xval.begin() + n);
            res.objective = 0.0;
            for (int j = 0; j < ncols; ++j) res.objective += cost[j] * xval[j];
            res.dual_bound = (s == SolveStatus::Optimal) ? dual_bound() : -kInf;
            total_iters += iters;
            return res;
        };

        while (true) {
            if (iters > opts.max_iterations)
                throw NumericalError("simplex iteration limit exceeded");
            if (static_cast<int>(etas.size()) >= opts.refactor_interval) refactorize();

            // Phase and pricing vector: in phase 1 price the infeasibility
            // gradient, in phase 2 the objective restricted to the basis.
            bool phase1 = false;
            for (int i = 0; i < m; ++i) {
                const double f = infeas(i);
                dwork[i] = (f > 0.0) ? 1.0 : (f < 0.0 ? -1.0 : 0.0);
                if (f != 0.0) phase1 = true;
            }
            if (!phase1)
                for (int i = 0; i < m; ++i) dwork[i] = cost[basic[i]];
            btran(dwork, ydense);

            int q = -1, q_dir = 0;
            double best = 0.0;
            for (int j = 0; j < ncols; ++j) {
                const ColStatus sj = st(j);
                if (sj == ColStatus::Basic) continue;
                if (sj != ColStatus::NonbasicFree && ub[j] - lb[j] <= kZeroTol) continue;
                const double z = (phase1 ? 0.0 : cost[j]) - col_dot(j, ydense);
                int dir = 0;
                if (sj == ColStatus::NonbasicLower) {
                    if (z < -opts.opt_tol) dir = +1;
                } else if (sj == ColStatus::NonbasicUpper) {
                    if (z > opts.opt_tol) dir = -1;
                } else {
                    if (z < -opts.opt_tol)
                        dir = +1;
                    else if (z > opts.opt_tol)
                        dir = -1;
                }
                if (dir == 0) continue;
                if (bland) {
                    q = j;
                    q_dir = dir;
                    break;
                }
                if (std::abs(z) > best + kZeroTol) {
                    best = std::abs(z);
                    q = j;
                    q_dir = dir;
                }
            }

            if (q < 0) {
                // Re-verify on fresh factors before concluding the phase.
                if (!etas.empty() && confirm < 3) {
                    ++confirm;
                    refactorize();
                    continue;
                }
                if (phase1) return finish(SolveStatus::Infeasible);
                return finish(SolveStatus::Optimal);
            }

            for (int i = 0; i < m; ++i) work_m[i] = 0.0;
            for_col(q, [&](int r, double v) { work_m[r] = v; });
            ftran(work_m, alpha);

            const double t = static_cast<double>(q_dir);

            // Two-pass ratio test: exact minimum first, then the block with the
            // largest pivot among ties within 1e-9.
            double theta_min = kInf;
            for (int i = 0; i < m; ++i) {
                const double a = alpha[i];
                if (std::abs(a) <= opts.pivot_tol) continue;
                const int jb = basic[i];
                const double delta = -t * a;
                const double f = phase1 ? infeas(i) : 0.0;
                double limit = kInf;
                if (f < 0.0) {
                    if (delta > 0.0) limit = (lb[jb] - xval[jb]) / delta;
                } else if (f > 0.0) {
                    if (delta < 0.0) limit = (ub[jb] - xval[jb]) / delta;
                } else {
                    if (delta > 0.0 && ub[jb] < kInf)
                        limit = (ub[jb] - xval[jb]) / delta;
                    else if (delta < 0.0 && lb[jb] > -kInf)
                        limit = (lb[jb] - xval[jb]) / delta;
                }
                if (limit == kInf) continue;
                if (limit < 0.0) limit = 0.0;
                theta_min = std::min(theta_min, limit);
            }
            int block_pos = -1;
            int block_to_upper = 0;
            double block_piv = 0.0;
            if (theta_min < kInf) {
                for (int i = 0; i < m; ++i) {
                    const double a = alpha[i];
                    if (std::abs(a) <= opts.pivot_tol) continue;
                    const int jb = basic[i];
                    const double delta = -t * a;
                    const double f = phase1 ? infeas(i) : 0.0;
                    double limit = kInf;
                    int to_upper = 0;
                    if (f < 0.0) {
                        if (delta > 0.0) limit = (lb[jb] - xval[jb]) / delta;
                    } else if (f > 0.0) {
                        if (delta < 0.0) {
                            limit = (ub[jb] - xval[jb]) / delta;
                            to_upper = 1;
                        }
                    } else {
                        if (delta > 0.0 && ub[jb] < kInf) {
                            limit = (ub[jb] - xval[jb]) / delta;
                            to_upper = 1;
                        } else if (delta < 0.0 && lb[jb] > -kInf) {
                            limit = (lb[jb] - xval[jb]) / delta;
                        }
                    }
                    if (limit == kInf) continue;
                    if (limit < 0.0) limit = 0.0;
                    if (limit <= theta_min + 1e-9 &&
                        (block_pos < 0 || std::abs(a) > std::abs(block_piv) + kZeroTol ||
                         (std::abs(std::abs(a) - std::abs(block_piv)) <= kZeroTol &&
                          i < block_pos))) {
                        block_pos = i;
                        block_piv = a;
                        block_to_upper = to_upper;
                    }
                }
            }

            const double range_q = ub[q] - lb[q];
            const bool can_flip = st(q) != ColStatus::NonbasicFree && range_q < kInf;
            double theta;
            bool do_flip;
            if (can_flip && range_q <= theta_min) {
                theta = range_q;
                do_flip = true;
            } else if (block_pos >= 0) {
                theta = theta_min;
                do_flip = false;
            } else if (phase1) {
                throw NumericalError("phase-1 ratio test found no blocking bound");
            } else {
                return finish(SolveStatus::Unbounded);
            }

            ++iters;
            if (theta > 1e-11) {
                degen_streak = 0;
                bland = false;
            } else if (++degen_streak >= kDegenerateStreak) {
                bland = true;
            }

            if (theta != 0.0)
                for (int i = 0; i < m; ++i)
                    if (alpha[i] != 0.0) xval[basic[i]] -= t * theta * alpha[i];

            if (do_flip) {
                set_st(q, st(q) == ColStatus::NonbasicLower ? ColStatus::NonbasicUpper
                                                            : ColStatus::NonbasicLower);
                xval[q] = (st(q) == ColStatus::NonbasicLower) ? lb[q] : ub[q];
                confirm = 0;
                continue;
            }

            const int r = block_pos;
            const int leaving = basic[r];
            xval[q] += t * theta;
            xval[leaving] = block_to_upper ? ub[leaving] : lb[leaving];
            set_st(leaving, block_to_upper ? ColStatus::NonbasicUpper : ColStatus::NonbasicLower);
            set_st(q, ColStatus::Basic);
            pos_of[leaving] = -1;
            pos_of[q] = r;
            basic[r] = q;

            Eta e;
            e.r = r;
            e.ar = alpha[r];
            for (int i = 0; i < m; ++i)
                if (i != r && std::abs(alpha[i]) > kDropTol) e.entries.emplace_back(i, alpha[i]);
            etas.push_back(std::move(e));
            confirm = 0;
        }
    }

    double dual_bound() {
        for (int i = 0; i < m; ++i) dwork[i] = cost[basic[i]];
        btran(dwork, ydense);
        double bound = 0.0;
        for (int i = 0; i < m; ++i) bound += ydense[i] * b[i];
        for (int j = 0; j < ncols; ++j) {
            if (st(j) == ColStatus::Basic) continue;
            const double z = cost[j] - col_dot(j, ydense);
            if (z > opts.opt_tol && lb[j] > -kInf)
                bound += z * lb[j];
            else if (z < -opts.opt_tol && ub[j] < kInf)
                bound += z * ub[j];
        }
        return bound;
    }
};

BoundedSimplex::BoundedSimplex(const MilpModel& model, SimplexOptions opts)
    : impl_(std::make_unique<Impl>(model, opts)) {}

BoundedSimplex::~BoundedSimplex() = default;

void BoundedSimplex::set_bounds(int var, double lower, double upper) {
    impl_->lb[var] = lower;
    impl_->ub[var] = upper;
}

void BoundedSimplex::reset_bounds() {
    std::copy(impl_->lb_model.begin(), impl_->lb_model.end(), impl_->lb.begin());
    std::copy(impl_->ub_model.begin(), impl_->ub_model.end(), impl_->ub.begin());
}

LpResult BoundedSimplex::solve(const Basis* warm) { return impl_->run(warm); }

Basis BoundedSimplex::basis() const {
    Basis bset;
    bset.status = impl_->status;
    bset.basic = impl_->basic;
    return bset;
}

int BoundedSimplex::num_structural() const { return impl_->n; }

std::int64_t BoundedSimplex::total_iterations() const { return impl_->total_iters; }

}  // namespace gridgame
