#include "gbessel/janowski.hpp"

#include <cmath>

#include "gbessel/error.hpp"

namespace gbessel {

JanowskiPair::JanowskiPair(double A, double B) : a_(A), b_(B) {
    if (!std::isfinite(A) || !std::isfinite(B)) throw InvalidArgument("A and B must be finite");
    if (std::abs(B + 1.0) < 1e-12) b_ = -1.0;
    if (!(b_ >= -1.0 && b_ < a_ && a_ <= 1.0)) {
        throw InvalidArgument("Janowski pair requires -1 <= B < A <= 1");
    }
}

cplx mobius(const JanowskiPair& pair, cplx z) {
    const cplx den = 1.0 + pair.B() * z;
    if (std::abs(den) < 1e-14) throw DegenerateDenominator("1 + B z vanishes");
    return (1.0 + pair.A() * z) / den;
}

TargetRegion target_region(const JanowskiPair& pair) {
    TargetRegion r;
    const double A = pair.A();
    const double B = pair.B();
    if (pair.half_plane()) {
        r.kind = TargetRegion::Kind::HalfPlane;
        r.re_bound = (1.0 - A) / 2.0;
    } else {
        const double d = 1.0 - B * B;
        r.kind = TargetRegion::Kind::Disk;
        r.center = (1.0 - A * B) / d;
        r.radius = (A - B) / d;
    }
    return r;
}

double margin(const TargetRegion& region, cplx w) {
    if (region.kind == TargetRegion::Kind::HalfPlane) return w.real() - region.re_bound;
    return region.radius - std::abs(w - region.center);
}

bool contains(const TargetRegion& region, cplx w, double& margin_out) {
    margin_out = margin(region, w);
    return margin_out > 0.0;
}

bool contains(const TargetRegion& region, cplx w) { return margin(region, w) > 0.0; }

JanowskiPair pair_from_order(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) throw OrderOutOfRange("order must satisfy 0 <= beta < 1");
    return JanowskiPair(1.0 - 2.0 * beta, -1.0);
}

}  // namespace gbessel
