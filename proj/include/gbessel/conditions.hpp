#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbessel/bessel.hpp"
#include "gbessel/janowski.hpp"

namespace gbessel {

/// 3 - 2 sqrt(2): splits the low-B and high-B forms of the subordination
/// and derivative theorems. B equal to it is handled by the low-B form.
inline const double kRegimeSplit = 3.0 - 2.0 * std::sqrt(2.0);

/// Verdict of a sufficient-condition check. `slacks` lists every inequality
/// of the branch actually taken as (label, lhs - rhs); `satisfied` is true
/// iff all of them are >= 0.
struct CheckOutcome {
    bool satisfied = false;
    std::string branch;
    std::vector<std::pair<std::string, double>> slacks;
    std::vector<std::string> notes;

    // Corollaries only: the Janowski pair of the conclusion and the lower
    // bound on the real part it asserts.
    std::optional<JanowskiPair> implied_pair;
    std::optional<double> threshold;

    [[nodiscard]] std::optional<double> slack(std::string_view label) const;
};

/// Which reading of the printed product inequality of the convexity and
/// starlikeness theorems is used. AsPrinted subtracts the absolute-value
/// term from the right side; Conservative adds it (and for starlikeness
/// also takes the larger of the two printed c^2 denominators).
enum class ProductReading { AsPrinted, Conservative };

/// u_p in P[A, B]. Low-B form for B <= 3 - 2 sqrt 2, high-B form above.
CheckOutcome check_subordination_theorem(const JanowskiPair& pair, double kappa, double c);

/// (-4 kappa / c) u_p' in P[A, B]; the subordination conditions with
/// kappa - 1 replaced by kappa. Throws ZeroC for c == 0.
CheckOutcome check_derivative_theorem(const JanowskiPair& pair, double kappa, double c);

/// 1 + z u_p'' / u_p' subordinate to (1 + A z)/(1 + B z). Pairs outside
/// -1 <= B <= 0 < A are reported unsatisfied with an out-of-regime note.
CheckOutcome check_convexity_theorem(const JanowskiPair& pair, double kappa, double c,
                                     ProductReading reading = ProductReading::Conservative);

/// z u_p in S*[A, B].
CheckOutcome check_starlike_theorem(const JanowskiPair& pair, double kappa, double c,
                                    ProductReading reading = ProductReading::Conservative);

enum class CorollaryId { HalfplaneCRatio, ReHalf, CcOrder, DerivReHalf };

std::string_view to_string(CorollaryId id);
/// Throws UnknownCorollary.
CorollaryId parse_corollary(std::string_view name);

CheckOutcome check_corollary(CorollaryId id, double kappa, double c);

struct BoundCheck {
    std::string name;
    double bound = 0.0;
    double observed = 0.0;
    bool holds = false;
};

struct McCartyReport {
    std::array<BoundCheck, 3> checks;
    std::vector<std::string> notes;
    [[nodiscard]] bool all_hold() const;
};

/// Absolute tolerance used when a McCarty inequality is met with equality.
inline constexpr double kBoundEqualityTol = 1e-12;

/// The three growth/real-part/derivative inequalities for the modified
/// spherical Bessel function i_p = u_{p,2,-1}, p >= -1/2, |z| < 1.
McCartyReport mccarty_bounds(double p, cplx z, const EvalConfig& cfg = {});

/// Point (i rho, sigma, mu + i nu; z) at which an admissibility functional
/// is probed.
struct AdmissibilityProbe {
    double rho = 0.0;
    double sigma = -0.5;
    double mu = 0.0;
    double nu = 0.0;
    cplx z{0.0, 0.0};

    /// sigma <= -(1 + rho^2)/2, sigma + mu <= 0, |z| < 1.
    [[nodiscard]] bool valid() const;
};

enum class PsiForm { Subordination, Convexity };

std::string_view to_string(PsiForm form);
PsiForm parse_psi_form(std::string_view name);

/// Value of the differential-subordination functional at a probe.
/// Subordination: Psi(r, s, t; z) with r = i rho, s = sigma, t = mu + i nu.
/// Convexity: s + F1 r^2 + F2 r + F3 with r = i rho, s = sigma (mu, nu unused).
/// Throws InvalidArgument for an invalid probe.
cplx eval_psi(PsiForm form, const JanowskiPair& pair, double kappa, double c,
              const AdmissibilityProbe& probe);

}  // namespace gbessel
