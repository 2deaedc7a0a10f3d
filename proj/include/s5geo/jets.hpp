#pragma once

#include <algorithm>
#include <cmath>

#include "s5geo/errors.hpp"
#include "s5geo/surfaces.hpp"

namespace s5geo {

// Value and raw partial derivatives D^(p,q)X for p+q <= order at one
// parameter point.  Mixed partials are a single table, so symmetry holds by
// construction.
struct ParamJet {
    double u = 0.0, v = 0.0;
    int order = 0;
    CVec3d d[4][4]{};  // d[p][q], valid for p + q <= order

    const CVec3d& X() const { return d[0][0]; }
    const CVec3d& Xu() const { return d[1][0]; }
    const CVec3d& Xv() const { return d[0][1]; }
};

// Value, gradient and Hessian of a scalar field on the chart.
struct ScalarJet2 {
    double f = 0, fu = 0, fv = 0, fuu = 0, fuv = 0, fvv = 0;
};

template <int N>
inline ScalarJet2 scalar_jet(const Tay<N>& t) {
    static_assert(N >= 2);
    ScalarJet2 j;
    j.f = t.deriv(0, 0);
    j.fu = t.deriv(1, 0);
    j.fv = t.deriv(0, 1);
    j.fuu = t.deriv(2, 0);
    j.fuv = t.deriv(1, 1);
    j.fvv = t.deriv(0, 2);
    return j;
}

enum class JetMethod { taylor, finite_difference };

namespace detail {

template <int N>
inline void fill_jet(ParamJet& j, const CVec3<Tay<N>>& X) {
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q <= N; ++q)
            for (int k = 0; k < 3; ++k)
                j.d[p][q][k] = {X[k].re.deriv(p, q), X[k].im.deriv(p, q)};
}

// Central product stencils on a 5x5 sample grid, one Richardson/Neville
// tableau per derivative, best-error entry kept (Ridders' stopping rule).
// The step sequence is halved from coarse down to the documented floor
// max(1e-4, 1e-4*|point|); leading error is O(h^4) already at the first
// extrapolation level and the tableau usually reaches roundoff before the
// floor.
class FiniteDiffTable {
public:
    FiniteDiffTable(const ParametricSurface& f, double u, double v, int order)
        : f_(f), u_(u), v_(v), order_(order) {}

    void run(ParamJet& out) {
        const double floor_h = 1e-4 * std::max(1.0, std::hypot(u_, v_));
        double h = 0.4;
        std::vector<double> steps;
        while (h >= floor_h && steps.size() < 14) {
            steps.push_back(h);
            h *= 0.5;
        }

        struct Slot {
            std::vector<CVec3d> neville;
            CVec3d best{};
            double err = std::numeric_limits<double>::infinity();
        };
        Slot slot[4][4];

        for (std::size_t lev = 0; lev < steps.size(); ++lev) {
            CVec3d grid[5][5];
            for (int i = -2; i <= 2; ++i)
                for (int jj = -2; jj <= 2; ++jj)
                    grid[i + 2][jj + 2] = f_.value(u_ + i * steps[lev], v_ + jj * steps[lev]);

            for (int p = 0; p <= order_; ++p)
                for (int q = 0; p + q <= order_; ++q) {
                    if (p == 0 && q == 0) continue;
                    update(slot[p][q], stencil(grid, p, q, steps[lev]), lev);
                }
        }

        out.d[0][0] = f_.value(u_, v_);
        for (int p = 0; p <= order_; ++p)
            for (int q = 0; p + q <= order_; ++q) {
                if (p == 0 && q == 0) continue;
                out.d[p][q] = slot[p][q].best;
            }
    }

private:
    // weights[k][i]: k-th derivative central stencil on offsets -2..2,
    // to be divided by h^k.
    static constexpr double weights[4][5] = {
        {0, 0, 1, 0, 0},
        {1.0 / 12, -8.0 / 12, 0, 8.0 / 12, -1.0 / 12},  // O(h^4) first derivative
        {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12},
        {-0.5, 1.0, 0, -1.0, 0.5},
    };

    CVec3d stencil(const CVec3d grid[5][5], int p, int q, double h) const {
        CVec3d acc{};
        for (int i = 0; i < 5; ++i) {
            if (weights[p][i] == 0.0) continue;
            CVec3d row{};
            for (int jj = 0; jj < 5; ++jj) {
                if (weights[q][jj] == 0.0) continue;
                row = row + weights[q][jj] * grid[i][jj];
            }
            acc = acc + weights[p][i] * row;
        }
        return std::pow(1.0 / h, p + q) * acc;
    }

    struct SlotRef {};

    template <class Slot>
    static void update(Slot& s, CVec3d est, std::size_t lev) {
        // Neville extrapolation in h^2 with ratio 4 between successive steps.
        std::vector<CVec3d>& row = s.neville;
        std::vector<CVec3d> next(lev + 1);
        next[0] = est;
        double fac = 1.0;
        for (std::size_t m = 1; m <= lev && m < row.size() + 1; ++m) {
            fac *= 4.0;
            next[m] = next[m - 1] + (1.0 / (fac - 1.0)) * (next[m - 1] - row[m - 1]);
            const double err = std::max(diff(next[m], next[m - 1]), diff(next[m], row[m - 1]));
            if (err < s.err) {
                s.err = err;
                s.best = next[m];
            }
        }
        if (lev == 0) {
            s.best = est;
            s.err = std::numeric_limits<double>::infinity();
        }
        row = std::move(next);
    }

    static double diff(const CVec3d& a, const CVec3d& b) { return sup_norm(a - b); }

    const ParametricSurface& f_;
    double u_, v_;
    int order_;
};

}  // namespace detail

inline ParamJet jet(const ParametricSurface& f, double u, double v, int order,
                    JetMethod method = JetMethod::taylor) {
    if (order < 1 || order > 3) throw GeometryError("jet order must be 1..3");
    ParamJet j;
    j.u = u;
    j.v = v;
    j.order = order;
    if (method == JetMethod::taylor) {
        switch (order) {
            case 1: detail::fill_jet(j, f.eval1(u, v)); break;
            case 2: detail::fill_jet(j, f.eval2(u, v)); break;
            default: detail::fill_jet(j, f.eval3(u, v)); break;
        }
    } else {
        detail::FiniteDiffTable(f, u, v, order).run(j);
    }
    for (int p = 0; p <= order; ++p)
        for (int q = 0; p + q <= order; ++q)
            if (!all_finite(j.d[p][q])) throw NonFinite();
    return j;
}

}  // namespace s5geo
