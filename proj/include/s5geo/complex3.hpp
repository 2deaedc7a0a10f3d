#pragma once

#include <array>
#include <complex>

#include "s5geo/taylor.hpp"

namespace s5geo {

// Complex number over a generic scalar (double or Tay<N>).
template <class S>
struct Cx {
    S re{}, im{};

    Cx() = default;
    Cx(S r) : re(std::move(r)) {}
    Cx(S r, S i) : re(std::move(r)), im(std::move(i)) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    Cx operator-() const { return {-re, -im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const S& s, const Cx& a) { return {s * a.re, s * a.im}; }
    friend Cx operator*(const Cx& a, const S& s) { return s * a; }
};

template <class S> inline Cx<S> conj(const Cx<S>& a) { return {a.re, -a.im}; }
template <class S> inline Cx<S> times_i(const Cx<S>& a) { return {-a.im, a.re}; }

// Vector in C^3 ~ R^6 over a generic scalar.
template <class S>
struct CVec3 {
    std::array<Cx<S>, 3> c{};

    Cx<S>& operator[](int k) { return c[k]; }
    const Cx<S>& operator[](int k) const { return c[k]; }

    friend CVec3 operator+(const CVec3& a, const CVec3& b) {
        return {{{a[0] + b[0], a[1] + b[1], a[2] + b[2]}}};
    }
    friend CVec3 operator-(const CVec3& a, const CVec3& b) {
        return {{{a[0] - b[0], a[1] - b[1], a[2] - b[2]}}};
    }
    CVec3 operator-() const { return {{{-c[0], -c[1], -c[2]}}}; }
    friend CVec3 operator*(const S& s, const CVec3& a) {
        return {{{s * a[0], s * a[1], s * a[2]}}};
    }
    friend CVec3 operator*(double s, const CVec3& a) {
        return S(s) * a;
    }
};

using CVec3d = CVec3<double>;

template <class S>
inline CVec3<S> times_i(const CVec3<S>& z) {
    return {{{times_i(z[0]), times_i(z[1]), times_i(z[2])}}};
}

// Hermitian product (z, w) = sum z_k conj(w_k).
template <class S>
inline Cx<S> hermitian(const CVec3<S>& z, const CVec3<S>& w) {
    Cx<S> s = z[0] * conj(w[0]);
    s = s + z[1] * conj(w[1]);
    s = s + z[2] * conj(w[2]);
    return s;
}

// Real inner product <z, w> = Re (z, w).
template <class S>
inline S inner(const CVec3<S>& z, const CVec3<S>& w) {
    return z[0].re * w[0].re + z[0].im * w[0].im + z[1].re * w[1].re + z[1].im * w[1].im +
           z[2].re * w[2].re + z[2].im * w[2].im;
}

template <class S>
inline S norm2(const CVec3<S>& z) { return inner(z, z); }

template <class S>
inline CVec3<S> normalized(const CVec3<S>& z) {
    using s5geo::sqrt;
    using std::sqrt;
    S inv = recip(sqrt(norm2(z)));
    return inv * z;
}

template <class S>
inline CVec3<S> lift(const CVec3d& z) {
    CVec3<S> r;
    for (int k = 0; k < 3; ++k) r[k] = {S(z[k].re), S(z[k].im)};
    return r;
}

template <class S>
inline CVec3d value_of(const CVec3<S>& z) {
    CVec3d r;
    for (int k = 0; k < 3; ++k) r[k] = {value_of(z[k].re), value_of(z[k].im)};
    return r;
}
inline const CVec3d& value_of(const CVec3d& z) { return z; }

inline double sup_norm(const CVec3d& z) {
    double m = 0.0;
    for (int k = 0; k < 3; ++k)
        m = std::max(m, std::max(std::abs(z[k].re), std::abs(z[k].im)));
    return m;
}

template <class S>
inline bool all_finite(const CVec3<S>& z) {
    for (int k = 0; k < 3; ++k)
        if (!all_finite(z[k].re) || !all_finite(z[k].im)) return false;
    return true;
}

inline CVec3d from_std(const std::array<std::complex<double>, 3>& z) {
    return {{{{z[0].real(), z[0].imag()}, {z[1].real(), z[1].imag()}, {z[2].real(), z[2].imag()}}}};
}
inline std::array<std::complex<double>, 3> to_std(const CVec3d& z) {
    return {std::complex<double>(z[0].re, z[0].im), std::complex<double>(z[1].re, z[1].im),
            std::complex<double>(z[2].re, z[2].im)};
}

}  // namespace s5geo
