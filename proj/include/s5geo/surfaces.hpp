#pragma once

#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "s5geo/complex3.hpp"
#include "s5geo/errors.hpp"

namespace s5geo {

struct Domain {
    double u0, u1, v0, v1;
    bool u_periodic, v_periodic;
};

// A parametric immersion (u,v) -> C^3 with closed-form jets.  Implementations
// provide one scalar-generic map; the facade below stamps out the virtual
// evaluations for plain values and for truncated Taylor scalars.
class ParametricSurface {
public:
    virtual ~ParametricSurface() = default;
    virtual std::string id() const = 0;
    virtual Domain domain() const = 0;
    virtual CVec3<double> value(double u, double v) const = 0;
    virtual CVec3<Tay<1>> eval1(double u, double v) const = 0;
    virtual CVec3<Tay<2>> eval2(double u, double v) const = 0;
    virtual CVec3<Tay<3>> eval3(double u, double v) const = 0;
};

template <class Derived>
class SurfaceFacade : public ParametricSurface {
public:
    CVec3<double> value(double u, double v) const override {
        return self().template map<double>(u, v);
    }
    CVec3<Tay<1>> eval1(double u, double v) const override {
        return self().template map<Tay<1>>(Tay<1>::var_u(u), Tay<1>::var_v(v));
    }
    CVec3<Tay<2>> eval2(double u, double v) const override {
        return self().template map<Tay<2>>(Tay<2>::var_u(u), Tay<2>::var_v(v));
    }
    CVec3<Tay<3>> eval3(double u, double v) const override {
        return self().template map<Tay<3>>(Tay<3>::var_u(u), Tay<3>::var_v(v));
    }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

// X_k(u,v) = r_k exp(i(m_k u + n_k v)).  Lives on S^5 iff sum r_k^2 = 1.
class HomogeneousTorus final : public SurfaceFacade<HomogeneousTorus> {
public:
    HomogeneousTorus(std::array<double, 3> radii, std::array<double, 3> m,
                     std::array<double, 3> n, std::string name = "homogeneous")
        : r_(radii), m_(m), n_(n), name_(std::move(name)) {}

    template <class S>
    CVec3<S> map(const S& u, const S& v) const {
        using s5geo::cos;
        using s5geo::sin;
        using std::cos;
        using std::sin;
        CVec3<S> X;
        for (int k = 0; k < 3; ++k) {
            const S phase = m_[k] * u + n_[k] * v;
            X[k] = Cx<S>(r_[k] * cos(phase), r_[k] * sin(phase));
        }
        return X;
    }

    std::string id() const override { return name_; }
    Domain domain() const override { return {0.0, 2.0 * M_PI, 0.0, 2.0 * M_PI, true, true}; }

    const std::array<double, 3>& radii() const { return r_; }
    const std::array<double, 3>& row_u() const { return m_; }
    const std::array<double, 3>& row_v() const { return n_; }

private:
    std::array<double, 3> r_, m_, n_;
    std::string name_;
};

// Totally geodesic 2-sphere S^5 cut out by a real 3-plane span{A,B,C}.
// The default basis is chosen so the restriction of the Kaehler form to the
// plane has rank 2, which makes the contact angle non-constant.
class GreatSphere final : public SurfaceFacade<GreatSphere> {
public:
    GreatSphere()
        : A_{{{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}}},
          B_{{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}}},
          C_{{{{0.0, 0.0}, {0.0, M_SQRT1_2}, {M_SQRT1_2, 0.0}}}} {}

    GreatSphere(const CVec3d& A, const CVec3d& B, const CVec3d& C) : A_(A), B_(B), C_(C) {}

    template <class S>
    CVec3<S> map(const S& u, const S& v) const {
        using s5geo::cos;
        using s5geo::sin;
        using std::cos;
        using std::sin;
        const S cu = cos(u), su = sin(u), cv = cos(v), sv = sin(v);
        return (cu * cv) * lift<S>(A_) + (su * cv) * lift<S>(B_) + sv * lift<S>(C_);
    }

    std::string id() const override { return "great-sphere"; }
    Domain domain() const override { return {0.0, 2.0 * M_PI, -1.2, 1.2, true, false}; }

private:
    CVec3d A_, B_, C_;
};

// Trigonometric polynomial map R^2 -> R^6, not constrained to the sphere.
// Used as a corpus for cross-checking Taylor jets against finite differences.
class TrigSurface final : public SurfaceFacade<TrigSurface> {
public:
    struct Term {
        int comp;            // 0..5 (real slot in R^6)
        int ju, jv;          // frequencies, |ju| + |jv| <= degree
        double ccos, csin;
    };

    explicit TrigSurface(std::vector<Term> terms, std::string name = "trig")
        : terms_(std::move(terms)), name_(std::move(name)) {}

    static TrigSurface random(std::mt19937_64& rng, int degree = 3) {
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        std::vector<Term> terms;
        for (int comp = 0; comp < 6; ++comp)
            for (int ju = 0; ju <= degree; ++ju)
                for (int jv = -degree; jv <= degree; ++jv) {
                    if (ju + std::abs(jv) > degree) continue;
                    if (ju == 0 && jv < 0) continue;
                    terms.push_back({comp, ju, jv, coef(rng), coef(rng)});
                }
        return TrigSurface(std::move(terms));
    }

    template <class S>
    CVec3<S> map(const S& u, const S& v) const {
        using s5geo::cos;
        using s5geo::sin;
        using std::cos;
        using std::sin;
        std::array<S, 6> comp{};
        for (const Term& t : terms_) {
            const S phase = double(t.ju) * u + double(t.jv) * v;
            comp[t.comp] += t.ccos * cos(phase) + t.csin * sin(phase);
        }
        CVec3<S> X;
        for (int k = 0; k < 3; ++k) X[k] = Cx<S>(comp[2 * k], comp[2 * k + 1]);
        return X;
    }

    std::string id() const override { return name_; }
    Domain domain() const override { return {0.0, 2.0 * M_PI, 0.0, 2.0 * M_PI, true, true}; }

private:
    std::vector<Term> terms_;
    std::string name_;
};

inline std::unique_ptr<ParametricSurface> make_builtin(const std::string& name) {
    const double t = 1.0 / std::sqrt(3.0);
    if (name == "legendrian-flat")
        return std::make_unique<HomogeneousTorus>(std::array{t, t, t}, std::array{1.0, 0.0, -1.0},
                                                  std::array{0.0, 1.0, -1.0}, name);
    if (name == "clifford-s3")
        return std::make_unique<HomogeneousTorus>(std::array{M_SQRT1_2, M_SQRT1_2, 0.0},
                                                  std::array{1.0, 0.0, 0.0},
                                                  std::array{0.0, 1.0, 0.0}, name);
    if (name == "great-sphere") return std::make_unique<GreatSphere>();
    return nullptr;
}

}  // namespace s5geo
