#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "s5geo/complex3.hpp"
#include "s5geo/errors.hpp"

namespace s5geo {

// Exact algebra of C^3 ~ R^6 and the standard contact structure of the unit
// 5-sphere: Reeb field xi(z) = iz, contact plane Delta_z orthogonal to both
// z and iz.  Everything here is closed-form, so tolerances are pure roundoff.

inline std::pair<std::complex<double>, double> hermitian_inner(const CVec3d& z, const CVec3d& w) {
    const Cx<double> h = hermitian(z, w);
    return {std::complex<double>(h.re, h.im), h.re};
}

struct SpherePoint {
    CVec3d z;

    explicit SpherePoint(const CVec3d& p) : z(p) {
        if (std::abs(norm2(p) - 1.0) >= 1e-12)
            throw GeometryError("point is not on the unit sphere");
    }
};

inline CVec3d reeb(const SpherePoint& p) { return times_i(p.z); }

struct ContactSplit {
    double radial;            // <u, z>, removed before splitting
    double reeb_component;    // coefficient along xi = iz
    CVec3d contact_component; // remainder, lies in Delta_z
};

inline ContactSplit project(const SpherePoint& p, const CVec3d& u) {
    const CVec3d xi = reeb(p);
    ContactSplit s;
    s.radial = inner(u, p.z);
    s.reeb_component = inner(u, xi);
    s.contact_component = u - s.radial * p.z - s.reeb_component * xi;
    return s;
}

}  // namespace s5geo
