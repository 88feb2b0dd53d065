#pragma once

#include <complex>
#include <vector>

namespace gbessel {

using cplx = std::complex<double>;

/// Distance below which kappa counts as a non-positive integer.
inline constexpr double kKappaExclusion = 1e-9;

/// Parameters (p, b, c) of the normalized generalized Bessel function
/// u_{p,b,c}(z) = 0F1(kappa; -c z / 4) with kappa = p + (b + 1) / 2.
///
/// Only constructible through make_params(), which rejects kappa values
/// that are (numerically) 0, -1, -2, ...
class BesselParams {
public:
    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double c() const noexcept { return c_; }
    [[nodiscard]] double kappa() const noexcept { return kappa_; }

    /// Same b and c, order p + 1 (kappa + 1).
    [[nodiscard]] BesselParams shifted() const;

    friend BesselParams make_params(double p, double b, double c);

private:
    BesselParams(double p, double b, double c, double kappa) noexcept
        : p_(p), b_(b), c_(c), kappa_(kappa) {}

    double p_;
    double b_;
    double c_;
    double kappa_;
};

/// Throws InvalidArgument for non-finite input, InvalidKappa when kappa is
/// within kKappaExclusion of a non-positive integer.
BesselParams make_params(double p, double b, double c);

/// Parameters realizing a given (kappa, c). Uses b = -1 so that p = kappa
/// and the stored kappa is bit-identical to the requested one.
BesselParams params_from_kappa(double kappa, double c);

struct EvalConfig {
    double rel_tol = 1e-14;
    int max_terms = 300;
};

struct EvalResult {
    /// values[k] is the k-th derivative of u at z.
    std::vector<cplx> values;
    int terms_used = 0;
    double truncation_estimate = 0.0;
};

/// Sums the power series and its term-wise derivatives up to `order` (0..3).
///
/// The loop stops once the largest term magnitude over all requested series
/// stays below rel_tol * max(1, |partial sum of u|) for two consecutive
/// terms (and past index `order`). Throws NoConvergence when max_terms is
/// exhausted first and InvalidArgument for |z| > 1 + 1e-9 or a bad order.
EvalResult eval_u(const BesselParams& params, cplx z, int order = 0,
                  const EvalConfig& cfg = {});

/// 4 z^2 u'' + 4 kappa z u' + c z u, which vanishes for the exact function.
cplx ode_residual(const BesselParams& params, cplx z, const EvalConfig& cfg = {});

/// Same residual with an arbitrary kappa in the differential operator; used
/// to check that the residual actually detects a wrong equation.
cplx ode_residual_with_kappa(const BesselParams& params, double operator_kappa,
                             cplx z, const EvalConfig& cfg = {});

/// 4 kappa u_p'(z) + c u_{p+1}(z).
cplx recurrence_residual(const BesselParams& params, cplx z, const EvalConfig& cfg = {});

}  // namespace gbessel
