#include "arakelov/simplex.hpp"

#include "arakelov/errors.hpp"

#include <cstddef>

namespace arakelov {

namespace {

class Tableau {
public:
    Tableau(const LinearProgram& lp) : m_(lp.b.size()), n_(lp.c.size()) {
        cols_ = n_ + m_ + 1;  // originals, slacks, artificial
        art_ = n_ + m_;
        rows_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (lp.a[i].size() != n_) throw DomainError("LP row " + std::to_string(i) + " has wrong width");
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = lp.a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i][art_] = -1;
            rows_[i][cols_] = lp.b[i];
            basis_[i] = n_ + i;
        }
        red_.assign(cols_, Rational(0));
    }

    // Phase 1. Returns false when the program is infeasible.
    bool make_feasible() {
        std::size_t worst = m_;
        for (std::size_t i = 0; i < m_; ++i)
            if (rows_[i][cols_] < 0 && (worst == m_ || rows_[i][cols_] < rows_[worst][cols_])) worst = i;
        if (worst == m_) {
            drop_artificial();
            return true;
        }
        // maximize -x_art
        std::vector<Rational> obj(cols_, Rational(0));
        obj[art_] = -1;
        pivot(worst, art_);
        set_objective(obj);
        run(true);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] != art_) continue;
            if (rows_[i][cols_] != 0) return false;
            // Degenerate: push the artificial out of the basis.
            for (std::size_t j = 0; j < art_; ++j)
                if (rows_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
        }
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] == art_ && rows_[i][cols_] != 0) return false;
        drop_artificial();
        return true;
    }

    // Phase 2. Returns false when unbounded.
    bool optimize(const std::vector<Rational>& c) {
        std::vector<Rational> obj(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) obj[j] = c[j];
        set_objective(obj);
        return run(false);
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][cols_];
        return x;
    }

    int pivots() const { return pivots_; }

private:
    void drop_artificial() {
        art_dropped_ = true;
        for (auto& row : rows_) row[art_] = 0;
    }

    void set_objective(const std::vector<Rational>& obj) {
        obj_ = obj;
        red_ = obj;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = obj[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (rows_[i][j] != 0) red_[j] -= cb * rows_[i][j];
        }
    }

    bool run(bool phase_one) {
        for (;;) {
            // Bland: lowest-index improving column, lowest-index basic variable
            // among tied ratios.
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j == art_ && (art_dropped_ || !phase_one)) continue;
                if (red_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) return true;
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][cols_] / rows_[i][enter];
                if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t j) {
        ++pivots_;
        std::vector<Rational>& pr = rows_[r];
        const Rational inv = 1 / pr[j];
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k <= cols_; ++k)
            if (pr[k] != 0) {
                pr[k] *= inv;
                nz.push_back(k);
            }
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][j] == 0) continue;
            const Rational f = rows_[i][j];
            for (std::size_t k : nz) rows_[i][k] -= f * pr[k];
        }
        if (red_[j] != 0) {
            const Rational f = red_[j];
            for (std::size_t k : nz)
                if (k < cols_) red_[k] -= f * pr[k];
        }
        basis_[r] = j;
    }

    std::size_t m_, n_, cols_, art_;
    bool art_dropped_ = false;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> obj_, red_;
    int pivots_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    if (lp.a.size() != lp.b.size()) throw DomainError("LP has mismatched row counts");
    Tableau t(lp);
    LpResult res;
    if (!t.make_feasible()) {
        res.status = LpStatus::infeasible;
        res.pivots = t.pivots();
        return res;
    }
    const bool bounded = t.optimize(lp.c);
    res.pivots = t.pivots();
    if (!bounded) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.x = t.solution();
    res.value = 0;
    for (std::size_t j = 0; j < lp.c.size(); ++j) res.value += lp.c[j] * res.x[j];
    return res;
}

}  // namespace arakelov
