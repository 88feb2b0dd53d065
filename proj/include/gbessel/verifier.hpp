#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbessel/bessel.hpp"
#include "gbessel/conditions.hpp"
#include "gbessel/janowski.hpp"

namespace gbessel {

/// Concentric circles |z| = radii[i], each sampled at `angles` equispaced
/// points starting at angle 0.
struct SampleGrid {
    std::vector<double> radii;
    int angles = 256;
    double max_radius = 0.999;

    /// Throws InvalidArgument unless radii are strictly increasing in
    /// (0, 1), none exceeds max_radius, and angles >= 8.
    void validate() const;

    /// `count` radii geometrically spaced from `inner` to `outer`.
    static SampleGrid geometric(int count, double inner, double outer, int angles);
    /// 24 radii from 0.05 to 0.999, 256 angles.
    static SampleGrid standard();
};

/// Which function of u_p is tested for membership in P[A, B].
enum class PropertySelector {
    U,                // u_p
    DerivNormalized,  // (-4 kappa / c) u_p'
    Convexity,        // 1 + z u_p'' / u_p'
    StarlikeZu,       // z (z u_p)' / (z u_p) = 1 + z u_p' / u_p
};

std::string_view to_string(PropertySelector s);
PropertySelector parse_selector(std::string_view name);

/// Magnitude below which a denominator (or the excluded value
/// (1 + B) w - (1 + A)) counts as vanishing.
inline constexpr double kDegeneracyTol = 1e-13;

enum class Verdict { HoldsOnGrid, Counterexample };
std::string_view to_string(Verdict v);

struct VerificationReport {
    PropertySelector selector = PropertySelector::U;
    JanowskiPair pair{1.0, -1.0};
    BesselParams params = make_params(0.0, 1.0, 0.0);
    Verdict verdict = Verdict::HoldsOnGrid;
    double min_margin = 0.0;
    cplx witness{0.0, 0.0};
    SampleGrid grid;
    std::vector<cplx> degeneracy_hits;
};

struct VerifyOptions {
    EvalConfig eval;
    /// Worker threads for grid evaluation and scans; results do not depend on it.
    int threads = 1;
    /// Angular subdivision of the local pass around the coarse witness.
    int refine_factor = 16;
};

/// Evaluates the selected functional on every grid point and tests image
/// containment in the target region of `pair`. The smallest margin wins,
/// ties broken by (radius index, angle index). The coarse witness is then
/// refined on its circle: one pass at refine_factor times the angular
/// resolution followed by a golden-section polish.
VerificationReport verify_membership(PropertySelector selector, const JanowskiPair& pair,
                                     const BesselParams& params, const SampleGrid& grid,
                                     const VerifyOptions& opts = {});

/// Largest r in (0, max_radius] such that membership holds on the disk of
/// radius r, to within `tol`. Each trial radius r is sampled by
/// `grid_density` circles r k / grid_density and 8 * grid_density angles.
/// Returns 0 if membership already fails at r = 0.01.
double property_radius(PropertySelector selector, const JanowskiPair& pair,
                       const BesselParams& params, int grid_density, double tol,
                       double max_radius = 0.999, const VerifyOptions& opts = {});

struct AdmissibilityResult {
    double max_re = 0.0;
    AdmissibilityProbe probe;
    long long probes_evaluated = 0;
};

/// Maximizes Re Psi over rho in [-rho_max, rho_max] (201 points),
/// sigma = -s (1 + rho^2)/2 for s = 1, 1.5, ..., (sigma_depth values),
/// mu = -m sigma for m in {0, 0.5, 1} (subordination form only), nu = 0,
/// and z over the origin plus every point of `z_grid`.
AdmissibilityResult admissibility_scan(PsiForm form, const JanowskiPair& pair, double kappa,
                                       double c, double rho_max, int sigma_depth,
                                       const SampleGrid& z_grid);

struct AxisRange {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 2;

    [[nodiscard]] double at(int i) const;
};

struct ScanRow {
    double kappa = 0.0;
    double c = 0.0;
    CheckOutcome checker;
    /// Corollaries whose conclusion is the scanned inclusion for this cell.
    std::vector<std::pair<CorollaryId, bool>> corollaries;
    Verdict numeric = Verdict::HoldsOnGrid;
    double min_margin = 0.0;
    cplx witness{0.0, 0.0};
    std::size_t degeneracy_hits = 0;

    /// true/false if some corollary applies (true if any is satisfied).
    [[nodiscard]] std::optional<bool> corollary_verdict() const;
    /// Checker claims the inclusion but the grid found a violation.
    [[nodiscard]] bool unsound() const {
        return checker.satisfied && numeric == Verdict::Counterexample;
    }
};

struct ScanOptions {
    VerifyOptions verify;
    ProductReading reading = ProductReading::Conservative;
};

/// Sweeps (kappa, c) over a rectangular grid, kappa outer, c inner. For each
/// cell the matching theorem checker, applicable corollaries and
/// verify_membership (with params_from_kappa) are evaluated.
std::vector<ScanRow> region_scan(PropertySelector selector, const JanowskiPair& pair,
                                 const AxisRange& kappa_range, const AxisRange& c_range,
                                 const SampleGrid& grid, const ScanOptions& opts = {});

/// The theorem checker that claims `selector`'s inclusion.
CheckOutcome theorem_for(PropertySelector selector, const JanowskiPair& pair, double kappa,
                         double c, ProductReading reading = ProductReading::Conservative);

}  // namespace gbessel
