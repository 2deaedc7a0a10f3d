#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>

namespace s5geo {

// Truncated bivariate Taylor polynomial in (du, dv), total degree <= N.
//
// Coefficients are stored degree-major: for total degree d the block starts
// at d*(d+1)/2 and entry q within the block holds the coefficient of
// du^(d-q) dv^q.  c[idx(p,q)] is the Taylor *coefficient* of du^p dv^q,
// i.e. (d^{p+q} f / du^p dv^q) / (p! q!).
//
// Arithmetic truncates at degree N, so seeding u = u0 + du, v = v0 + dv and
// running a closed-form map through these scalars produces derivatives exact
// to roundoff.
template <int N>
struct Tay {
    static_assert(N >= 0 && N <= 3, "supported truncation orders are 0..3");
    static constexpr int order = N;
    static constexpr int ncoef = (N + 1) * (N + 2) / 2;

    std::array<double, ncoef> c{};

    Tay() = default;
    Tay(double x) { c[0] = x; }  // NOLINT: implicit lift of constants is intended

    static constexpr int idx(int p, int q) { return (p + q) * (p + q + 1) / 2 + q; }

    static Tay var_u(double u0) {
        Tay t(u0);
        if constexpr (N >= 1) t.c[idx(1, 0)] = 1.0;
        return t;
    }
    static Tay var_v(double v0) {
        Tay t(v0);
        if constexpr (N >= 1) t.c[idx(0, 1)] = 1.0;
        return t;
    }

    double value() const { return c[0]; }

    // Raw derivative d^{p+q} / du^p dv^q (coefficient times p! q!).
    double deriv(int p, int q) const {
        assert(p >= 0 && q >= 0 && p + q <= N);
        static constexpr double fact[4] = {1.0, 1.0, 2.0, 6.0};
        return c[idx(p, q)] * fact[p] * fact[q];
    }

    Tay& operator+=(const Tay& o) {
        for (int i = 0; i < ncoef; ++i) c[i] += o.c[i];
        return *this;
    }
    Tay& operator-=(const Tay& o) {
        for (int i = 0; i < ncoef; ++i) c[i] -= o.c[i];
        return *this;
    }
    Tay operator-() const {
        Tay r;
        for (int i = 0; i < ncoef; ++i) r.c[i] = -c[i];
        return r;
    }

    friend Tay operator+(Tay a, const Tay& b) { return a += b; }
    friend Tay operator-(Tay a, const Tay& b) { return a -= b; }

    friend Tay operator*(const Tay& a, const Tay& b) {
        Tay r;
        for (int d1 = 0; d1 <= N; ++d1)
            for (int q1 = 0; q1 <= d1; ++q1) {
                const double av = a.c[idx(d1 - q1, q1)];
                if (av == 0.0) continue;
                for (int d2 = 0; d2 + d1 <= N; ++d2)
                    for (int q2 = 0; q2 <= d2; ++q2)
                        r.c[idx(d1 - q1 + d2 - q2, q1 + q2)] += av * b.c[idx(d2 - q2, q2)];
            }
        return r;
    }
    Tay& operator*=(const Tay& o) { return *this = *this * o; }

    friend Tay operator*(double s, Tay a) {
        for (int i = 0; i < ncoef; ++i) a.c[i] *= s;
        return a;
    }
    friend Tay operator*(Tay a, double s) { return s * a; }
    friend Tay operator+(double s, Tay a) { a.c[0] += s; return a; }
    friend Tay operator+(Tay a, double s) { a.c[0] += s; return a; }
    friend Tay operator-(double s, const Tay& a) { Tay r = -a; r.c[0] += s; return r; }
    friend Tay operator-(Tay a, double s) { a.c[0] -= s; return a; }
};

template <int N> inline double value_of(const Tay<N>& t) { return t.c[0]; }
inline double value_of(double x) { return x; }

// Largest |coefficient| of degree >= 1; measures how non-constant a jet is.
template <int N>
inline double nonconst_sup(const Tay<N>& t) {
    double m = 0.0;
    for (int i = 1; i < Tay<N>::ncoef; ++i) m = std::max(m, std::abs(t.c[i]));
    return m;
}
inline double nonconst_sup(double) { return 0.0; }

// d/du and d/dv lower the truncation order by one.
template <int N>
inline Tay<N - 1> d_du(const Tay<N>& t) {
    Tay<N - 1> r;
    for (int d = 0; d <= N - 1; ++d)
        for (int q = 0; q <= d; ++q)
            r.c[Tay<N - 1>::idx(d - q, q)] = (d - q + 1) * t.c[Tay<N>::idx(d - q + 1, q)];
    return r;
}
template <int N>
inline Tay<N - 1> d_dv(const Tay<N>& t) {
    Tay<N - 1> r;
    for (int d = 0; d <= N - 1; ++d)
        for (int q = 0; q <= d; ++q)
            r.c[Tay<N - 1>::idx(d - q, q)] = (q + 1) * t.c[Tay<N>::idx(d - q, q + 1)];
    return r;
}

template <int M, int N>
inline Tay<M> truncate(const Tay<N>& t) {
    static_assert(M <= N);
    Tay<M> r;
    for (int i = 0; i < Tay<M>::ncoef; ++i) r.c[i] = t.c[i];
    return r;
}

// Composition with an analytic g given derivatives g^{(k)} at the value part.
// Writes g(f) = sum_k g^{(k)}(f0)/k! * (f - f0)^k, exact because (f - f0) is
// nilpotent at truncation order N.
template <int N>
inline Tay<N> compose(const Tay<N>& f, const std::array<double, 4>& g) {
    Tay<N> w = f;
    w.c[0] = 0.0;
    static constexpr double inv_fact[4] = {1.0, 1.0, 0.5, 1.0 / 6.0};
    Tay<N> r(g[N] * inv_fact[N]);
    for (int k = N - 1; k >= 0; --k) {
        r = r * w;
        r.c[0] += g[k] * inv_fact[k];
    }
    return r;
}

template <int N>
inline Tay<N> sin(const Tay<N>& f) {
    const double s = std::sin(f.c[0]), c = std::cos(f.c[0]);
    return compose(f, {s, c, -s, -c});
}
template <int N>
inline Tay<N> cos(const Tay<N>& f) {
    const double s = std::sin(f.c[0]), c = std::cos(f.c[0]);
    return compose(f, {c, -s, -c, s});
}
template <int N>
inline Tay<N> exp(const Tay<N>& f) {
    const double e = std::exp(f.c[0]);
    return compose(f, {e, e, e, e});
}
template <int N>
inline Tay<N> sqrt(const Tay<N>& f) {
    const double r = std::sqrt(f.c[0]);
    const double i = 1.0 / f.c[0];
    return compose(f, {r, 0.5 * r * i, -0.25 * r * i * i, 0.375 * r * i * i * i});
}
template <int N>
inline Tay<N> recip(const Tay<N>& f) {
    const double i = 1.0 / f.c[0];
    return compose(f, {i, -i * i, 2.0 * i * i * i, -6.0 * i * i * i * i});
}
inline double recip(double x) { return 1.0 / x; }
template <int N>
inline Tay<N> acos(const Tay<N>& f) {
    const double x = f.c[0];
    const double s2 = 1.0 - x * x;          // sin^2 of the result
    const double is = 1.0 / std::sqrt(s2);  // caller guards s2 > 0
    const double is3 = is * is * is;
    return compose(f, {std::acos(x), -is, -x * is3, -(1.0 + 2.0 * x * x) * is3 * is * is});
}

template <int N>
inline Tay<N> operator/(const Tay<N>& a, const Tay<N>& b) { return a * recip(b); }
template <int N>
inline Tay<N> operator/(const Tay<N>& a, double s) { return a * (1.0 / s); }
template <int N>
inline Tay<N> operator/(double s, const Tay<N>& b) { return s * recip(b); }

template <int N>
inline bool all_finite(const Tay<N>& t) {
    for (double x : t.c)
        if (!std::isfinite(x)) return false;
    return true;
}
inline bool all_finite(double x) { return std::isfinite(x); }

}  // namespace s5geo
