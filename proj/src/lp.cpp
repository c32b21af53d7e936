#include "apxpoly/lp.hpp"

#include <cstddef>

#include "apxpoly/errors.hpp"

namespace apxpoly {

namespace {

/*
 * Dense tableau simplex over exact rationals.
 *
 * Free variables are split x = xp - xn; one slack per row; one artificial
 * column per row. The artificial block starts as the identity, so at any
 * later point it holds the basis inverse, which is where the exact dual
 * multipliers are read from. Bland's rule is used for both the entering and
 * the leaving choice: with exact arithmetic, cycling is the only failure
 * mode, and Bland excludes it.
 */
class Simplex {
  public:
    Simplex(const LpProblem& p, const RatVec& objective_max)
        : n_(objective_max.size()), m_(p.rows.size()) {
        cols_ = 2 * n_ + 2 * m_;
        slack0_ = 2 * n_;
        art0_ = 2 * n_ + m_;
        cost_ = zero_vec(cols_);
        for (std::size_t j = 0; j < n_; ++j) {
            cost_[j] = objective_max[j];
            cost_[n_ + j] = -objective_max[j];
        }
        tab_.reserve(m_);
        rhs_.reserve(m_);
        basic_.reserve(m_);
        sigma_.reserve(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const LpRow& row = p.rows[i];
            if (row.normal.size() != n_) throw DimensionMismatch("constraint row length differs from the objective");
            const int sg = row.rhs < 0 ? -1 : 1;
            RatVec t = zero_vec(cols_);
            for (std::size_t j = 0; j < n_; ++j) {
                t[j] = sg * row.normal[j];
                t[n_ + j] = -t[j];
            }
            t[slack0_ + i] = sg;
            t[art0_ + i] = 1;
            tab_.push_back(std::move(t));
            rhs_.push_back(sg * row.rhs);
            sigma_.push_back(sg);
            basic_.push_back(sg > 0 ? slack0_ + i : art0_ + i);
        }
    }

    // returns false when phase I proves infeasibility
    bool run_phase1() {
        bool any_artificial = false;
        for (auto b : basic_) any_artificial |= (b >= art0_);
        if (!any_artificial) return true;
        RatVec aux_cost = zero_vec(cols_);
        for (std::size_t j = art0_; j < cols_; ++j) aux_cost[j] = -1;
        if (iterate(aux_cost, /*allow_artificial_enter=*/true) != npos) {
            throw Error("phase 1 objective cannot be unbounded");
        }
        Rational aux = 0;
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            if (basic_[r] >= art0_) aux -= rhs_[r];
        }
        if (aux < 0) return false;
        evict_artificials();
        return true;
    }

    LpOutcome run_phase2(const RatVec& objective_max) {
        const std::size_t enter = iterate(cost_, /*allow_artificial_enter=*/false);
        if (enter != npos) {
            return LpUnbounded{extract_ray(enter)};
        }
        RatVec x = zero_vec(n_);
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            if (basic_[r] < n_) x[basic_[r]] += rhs_[r];
            else if (basic_[r] < 2 * n_) x[basic_[r] - n_] -= rhs_[r];
        }
        // The artificial block started as the identity, so its current
        // content is the accumulated row transform; pricing the basic costs
        // through it yields one exact multiplier per original row.
        RatVec dual = zero_vec(m_);
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            const Rational cb = cost_[basic_[r]];
            if (cb == 0) continue;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[r][art0_ + i] != 0) dual[i] += cb * tab_[r][art0_ + i];
            }
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (sigma_[i] < 0) dual[i] = -dual[i];
        }
        const Rational value_max = dot(objective_max, x);
        return LpOptimal{value_max, std::move(x), std::move(dual)};
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Runs Bland pivoting for the given cost vector until optimal or, when
    // artificial columns are barred, until an unbounded column appears.
    // Returns npos at optimality, or the unbounded entering column.
    std::size_t iterate(const RatVec& cost, bool allow_artificial_enter) {
        build_objective_row(cost);
        for (;;) {
            const std::size_t limit = allow_artificial_enter ? cols_ : art0_;
            std::size_t enter = npos;
            for (std::size_t j = 0; j < limit; ++j) {
                if (obj_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return npos;
            std::size_t leave = npos;
            Rational best;
            for (std::size_t r = 0; r < tab_.size(); ++r) {
                if (tab_[r][enter] <= 0) continue;
                const Rational ratio = rhs_[r] / tab_[r][enter];
                if (leave == npos || ratio < best ||
                    (ratio == best && basic_[r] < basic_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == npos) return enter;  // unbounded direction
            pivot(leave, enter);
        }
    }

    void build_objective_row(const RatVec& cost) {
        obj_ = cost;
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            const Rational cb = cost[basic_[r]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (tab_[r][j] != 0) obj_[j] -= cb * tab_[r][j];
            }
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = Rational(1) / tab_[row][col];
        if (inv != 1) {
            for (auto& v : tab_[row]) {
                if (v != 0) v *= inv;
            }
            rhs_[row] *= inv;
        }
        for (std::size_t r = 0; r < tab_.size(); ++r) {
            if (r == row || tab_[r][col] == 0) continue;
            const Rational f = tab_[r][col];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (tab_[row][j] != 0) tab_[r][j] -= f * tab_[row][j];
            }
            rhs_[r] -= f * rhs_[row];
        }
        if (obj_[col] != 0) {
            const Rational f = obj_[col];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (tab_[row][j] != 0) obj_[j] -= f * tab_[row][j];
            }
        }
        basic_[row] = col;
    }

    // After a feasible phase I, swap remaining artificials out of the basis;
    // rows that cannot pivot are linear combinations of others and drop out.
    void evict_artificials() {
        for (std::size_t r = 0; r < tab_.size();) {
            if (basic_[r] < art0_) {
                ++r;
                continue;
            }
            std::size_t col = npos;
            for (std::size_t j = 0; j < art0_; ++j) {
                if (tab_[r][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col != npos) {
                pivot(r, col);
                ++r;
            } else {
                tab_.erase(tab_.begin() + r);
                rhs_.erase(rhs_.begin() + r);
                basic_.erase(basic_.begin() + r);
            }
        }
    }

    RatVec extract_ray(std::size_t enter) const {
        RatVec dz = zero_vec(cols_);
        dz[enter] = 1;
        for (std::size_t r = 0; r < tab_.size(); ++r) dz[basic_[r]] = -tab_[r][enter];
        RatVec ray = zero_vec(n_);
        for (std::size_t j = 0; j < n_; ++j) ray[j] = dz[j] - dz[n_ + j];
        return ray;
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t cols_;
    std::size_t slack0_;
    std::size_t art0_;
    RatVec cost_;
    RatMat tab_;
    RatVec rhs_;
    RatVec obj_;
    std::vector<std::size_t> basic_;
    std::vector<int> sigma_;  // per original row; never erased
};

}  // namespace

LpOutcome lp_solve(const LpProblem& problem) {
    const std::size_t n = problem.objective.size();
    if (n == 0) throw DimensionMismatch("objective must have at least one variable");
    RatVec objective_max = problem.objective;
    if (problem.sense == Sense::Min) objective_max = vec_scale(-1, objective_max);

    if (problem.rows.empty()) {
        if (is_zero_vec(objective_max)) {
            return LpOptimal{Rational(0), zero_vec(n), RatVec{}};
        }
        return LpUnbounded{objective_max};
    }

    Simplex simplex(problem, objective_max);
    if (!simplex.run_phase1()) return LpInfeasible{};
    LpOutcome out = simplex.run_phase2(objective_max);

    if (auto* opt = std::get_if<LpOptimal>(&out)) {
        if (problem.sense == Sense::Min) opt->value = -opt->value;
    }
    return out;
}

bool check_duality(const LpProblem& problem, const LpOptimal& opt) {
    const std::size_t n = problem.objective.size();
    RatVec c = problem.objective;
    Rational value = opt.value;
    if (problem.sense == Sense::Min) {
        c = vec_scale(-1, c);
        value = -value;
    }
    if (opt.dual.size() != problem.rows.size()) return false;
    RatVec combo = zero_vec(n);
    Rational dual_value = 0;
    for (std::size_t i = 0; i < problem.rows.size(); ++i) {
        if (opt.dual[i] < 0) return false;
        if (opt.dual[i] == 0) continue;
        combo = vec_add(combo, vec_scale(opt.dual[i], problem.rows[i].normal));
        dual_value += opt.dual[i] * problem.rows[i].rhs;
    }
    if (combo != c) return false;
    if (dual_value != value) return false;
    // primal feasibility of the reported point
    for (const auto& row : problem.rows) {
        if (dot(row.normal, opt.point) > row.rhs) return false;
    }
    return dot(problem.objective, opt.point) == opt.value;
}

}  // namespace apxpoly
