#pragma once

#include <complex>

namespace gbessel {

using cplx = std::complex<double>;

/// (A, B) with -1 <= B < A <= 1. B within 1e-12 of -1 is stored as -1.
class JanowskiPair {
public:
    JanowskiPair(double A, double B);

    [[nodiscard]] double A() const noexcept { return a_; }
    [[nodiscard]] double B() const noexcept { return b_; }
    /// B == -1: the image of the disk is a half-plane.
    [[nodiscard]] bool half_plane() const noexcept { return b_ == -1.0; }

    friend bool operator==(const JanowskiPair&, const JanowskiPair&) = default;

private:
    double a_;
    double b_;
};

/// Open image of the unit disk under z -> (1 + A z) / (1 + B z).
struct TargetRegion {
    enum class Kind { Disk, HalfPlane };

    Kind kind = Kind::HalfPlane;
    double center = 0.0;    // Disk
    double radius = 0.0;    // Disk
    double re_bound = 0.0;  // HalfPlane: Re w > re_bound
};

/// (1 + A z) / (1 + B z). Throws DegenerateDenominator if |1 + B z| < 1e-14.
cplx mobius(const JanowskiPair& pair, cplx z);

TargetRegion target_region(const JanowskiPair& pair);

/// Signed distance from w to the region boundary, positive inside.
double margin(const TargetRegion& region, cplx w);

/// Strict membership; `margin_out` receives margin(region, w).
bool contains(const TargetRegion& region, cplx w, double& margin_out);
bool contains(const TargetRegion& region, cplx w);

/// P[1 - 2 beta, -1], i.e. Re q > beta. Throws OrderOutOfRange unless 0 <= beta < 1.
JanowskiPair pair_from_order(double beta);

}  // namespace gbessel
