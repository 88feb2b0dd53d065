#include "gbessel/bessel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gbessel/error.hpp"

namespace gbessel {

namespace {

bool near_nonpositive_integer(double kappa) {
    if (kappa > kKappaExclusion) return false;
    return std::abs(kappa - std::round(kappa)) <= kKappaExclusion;
}

}  // namespace

BesselParams make_params(double p, double b, double c) {
    if (!std::isfinite(p) || !std::isfinite(b) || !std::isfinite(c)) {
        throw InvalidArgument("bessel parameters must be finite");
    }
    const double kappa = p + (b + 1.0) / 2.0;
    if (!std::isfinite(kappa) || near_nonpositive_integer(kappa)) {
        throw InvalidKappa("kappa = " + std::to_string(kappa) +
                           " is a non-positive integer");
    }
    return BesselParams(p, b, c, kappa);
}

BesselParams BesselParams::shifted() const { return make_params(p_ + 1.0, b_, c_); }

BesselParams params_from_kappa(double kappa, double c) { return make_params(kappa, -1.0, c); }

EvalResult eval_u(const BesselParams& params, cplx z, int order, const EvalConfig& cfg) {
    if (order < 0 || order > 3) throw InvalidArgument("derivative order must be in 0..3");
    if (!(cfg.rel_tol > 0.0) || cfg.max_terms < 1) throw InvalidArgument("bad EvalConfig");
    if (!(std::abs(z) <= 1.0 + 1e-9)) throw InvalidArgument("|z| must not exceed 1");

    const double kappa = params.kappa();
    const double ratio = -params.c() / 4.0;

    EvalResult out;
    out.values.assign(static_cast<std::size_t>(order) + 1, cplx{0.0, 0.0});

    // powers[j] holds z^(k - j) for the current index k.
    std::array<cplx, 4> powers{cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}};
    double coeff = 1.0;  // (-c/4)^k / ((kappa)_k k!)
    int quiet = 0;

    for (int k = 0; k < cfg.max_terms; ++k) {
        if (k > 0) {
            coeff *= ratio / ((kappa + k - 1) * k);
            for (int j = 3; j > 0; --j) powers[j] = powers[j - 1];
            powers[0] = powers[1] * z;
        }

        double largest = 0.0;
        double falling = 1.0;  // k (k-1) ... (k-j+1)
        for (int j = 0; j <= order && j <= k; ++j) {
            if (j > 0) falling *= static_cast<double>(k - j + 1);
            const cplx term = (coeff * falling) * powers[j];
            out.values[j] += term;
            largest = std::max(largest, std::abs(term));
        }

        out.terms_used = k + 1;
        out.truncation_estimate = largest;
        const double scale = std::max(1.0, std::abs(out.values[0]));
        quiet = (largest < cfg.rel_tol * scale) ? quiet + 1 : 0;
        if (quiet >= 2 && k > order) return out;
    }
    throw NoConvergence("series did not converge within " + std::to_string(cfg.max_terms) +
                        " terms");
}

cplx ode_residual_with_kappa(const BesselParams& params, double operator_kappa, cplx z,
                             const EvalConfig& cfg) {
    const auto r = eval_u(params, z, 2, cfg);
    const auto& v = r.values;
    return 4.0 * z * z * v[2] + 4.0 * operator_kappa * z * v[1] + params.c() * z * v[0];
}

cplx ode_residual(const BesselParams& params, cplx z, const EvalConfig& cfg) {
    return ode_residual_with_kappa(params, params.kappa(), z, cfg);
}

cplx recurrence_residual(const BesselParams& params, cplx z, const EvalConfig& cfg) {
    const BesselParams next = params.shifted();
    const cplx du = eval_u(params, z, 1, cfg).values[1];
    const cplx u_next = eval_u(next, z, 0, cfg).values[0];
    return 4.0 * params.kappa() * du + params.c() * u_next;
}

}  // namespace gbessel
