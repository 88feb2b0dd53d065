#include "gbessel/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "gbessel/error.hpp"

namespace gbessel {

std::optional<double> CheckOutcome::slack(std::string_view label) const {
    for (const auto& [name, value] : slacks) {
        if (name == label) return value;
    }
    return std::nullopt;
}

namespace {

void settle(CheckOutcome& out) {
    out.satisfied = std::all_of(out.slacks.begin(), out.slacks.end(),
                                [](const auto& s) { return s.second >= 0.0; });
}

// Shared body of the subordination and derivative theorems. `shifted` is
// kappa - 1 for u_p itself and kappa for the normalized derivative.
//
// With n the linear coefficient of the quadratic in x = Re z and m = c^2/16,
// the guard |n| >= 2m picks the endpoint branch, otherwise the vertex one.
// Both guards are evaluated on the same scaled quantity, so exactly one fires.
CheckOutcome subordination_form(const JanowskiPair& pair, double shifted, double c) {
    const double A = pair.A();
    const double B = pair.B();
    const double K = shifted;
    const double AmB = A - B;
    const double c2 = c * c;

    CheckOutcome out;
    const bool low = B <= kRegimeSplit;
    if (B == kRegimeSplit) out.notes.emplace_back("B on the regime split; low-B form used");

    out.slacks.emplace_back("base",
                            K - std::max(0.0, (1.0 + B) * (1.0 + A) / (4.0 * AmB) * std::abs(c)));

    double n;        // linear coefficient
    double lin;      // coefficient multiplying K in the constant term
    double g_lhs;    // |guard quantity|
    double g_rhs;
    if (low) {
        n = K * (A + B) * c / (2.0 * AmB) +
            (1.0 + B) * (1.0 + B) * (1.0 + A) * c / (4.0 * (1.0 - B) * AmB);
        lin = (1.0 + B) / (1.0 - B);
        g_lhs = std::abs(2.0 * K * (1.0 - B) * (A + B) * c + (1.0 + B) * (1.0 + B) * (1.0 + A) * c);
        g_rhs = 0.5 * AmB * (1.0 - B) * c2;
    } else {
        const double b3 = (1.0 + B) * (1.0 + B) * (1.0 + B);
        n = K * (A + B) * c / (2.0 * AmB) + 4.0 * B * (1.0 - B * B) * (1.0 + A) * c / (b3 * AmB);
        lin = 16.0 * B * (1.0 - B) / b3;
        g_lhs = std::abs(K * b3 * (A + B) * c + 8.0 * B * (1.0 - B * B) * (1.0 + A) * c);
        g_rhs = c2 * AmB * b3 / 4.0;
    }

    const std::string regime = low ? "low-B" : "high-B";
    if (g_lhs >= g_rhs) {
        out.branch = regime + ":endpoint";
        out.slacks.emplace_back("guard", g_lhs - g_rhs);
        const double rhs = (1.0 - A * A) * (1.0 - B * B) * c2 / (16.0 * AmB * AmB);
        out.slacks.emplace_back("main", K * K + K * lin - std::abs(n) - rhs);
    } else {
        out.branch = regime + ":vertex";
        out.slacks.emplace_back("guard", g_rhs - g_lhs);
        const double inner = K * K + K * lin - (1.0 - A * B) * (1.0 - A * B) * c2 / (16.0 * AmB * AmB);
        out.slacks.emplace_back("main", c2 / 4.0 * inner - n * n);
    }
    settle(out);
    return out;
}

// Convexity theorem at a given kappa. The starlikeness theorem is this
// statement for u_{p-1}, i.e. with kappa - 1, but its conditions are
// evaluated from their own printed form below.
CheckOutcome convexity_form(double A, double B, double kappa, double c, ProductReading reading) {
    const double AmB = A - B;
    CheckOutcome out;
    out.branch = reading == ProductReading::AsPrinted ? "as-printed" : "conservative";
    out.slacks.emplace_back(
        "base", kappa * (1.0 + B) -
                    ((1.0 + B) * (1.0 + B) * std::abs(c) / (4.0 * AmB) - (1.0 + A - B)));
    const double lhs = (1.0 + A - B + kappa * (1.0 + B)) * (1.0 - A + B + kappa * (1.0 - B));
    const double quad = (1.0 - B * B) * (1.0 - B * B) * c * c / (16.0 * AmB * AmB);
    const double lin =
        std::abs((B - AmB * (1.0 + B * B) + (1.0 - B * B) * B * kappa) * c / (2.0 * AmB));
    const double rhs = reading == ProductReading::AsPrinted ? quad - lin : quad + lin;
    out.slacks.emplace_back("product", lhs - rhs);
    return out;
}

}  // namespace

CheckOutcome check_subordination_theorem(const JanowskiPair& pair, double kappa, double c) {
    return subordination_form(pair, kappa - 1.0, c);
}

CheckOutcome check_derivative_theorem(const JanowskiPair& pair, double kappa, double c) {
    if (c == 0.0) throw ZeroC("the derivative theorem needs c != 0");
    return subordination_form(pair, kappa, c);
}

CheckOutcome check_convexity_theorem(const JanowskiPair& pair, double kappa, double c,
                                     ProductReading reading) {
    CheckOutcome out = convexity_form(pair.A(), pair.B(), kappa, c, reading);
    settle(out);
    if (!(pair.B() <= 0.0 && pair.A() > 0.0)) {
        out.satisfied = false;
        out.notes.emplace_back("out-of-regime: needs -1 <= B <= 0 < A");
    }
    return out;
}

CheckOutcome check_starlike_theorem(const JanowskiPair& pair, double kappa, double c,
                                    ProductReading reading) {
    const double A = pair.A();
    const double B = pair.B();
    const double AmB = A - B;
    CheckOutcome out;
    out.branch = reading == ProductReading::AsPrinted ? "as-printed" : "conservative";
    out.slacks.emplace_back(
        "base", kappa * (1.0 + B) - ((1.0 + B) * (1.0 + B) * std::abs(c) / (4.0 * AmB) - (A - 2.0 * B)));
    const double lhs = (A - 2.0 * B + kappa * (1.0 + B)) * (2.0 * B - A + kappa * (1.0 - B));
    const double q = (1.0 - B * B) * (1.0 - B * B) * c * c / 16.0;
    const double lin =
        std::abs((B * B * B - AmB * (1.0 + B * B) + (1.0 - B * B) * B * kappa) * c / (2.0 * AmB));
    double rhs;
    if (reading == ProductReading::AsPrinted) {
        rhs = q / AmB + lin;
    } else {
        rhs = std::max(q / AmB, q / (AmB * AmB)) + lin;
    }
    out.slacks.emplace_back("product", lhs - rhs);
    settle(out);
    return out;
}

}  // namespace gbessel

namespace gbessel {

std::string_view to_string(CorollaryId id) {
    switch (id) {
        case CorollaryId::HalfplaneCRatio: return "halfplane-c-ratio";
        case CorollaryId::ReHalf: return "re-half";
        case CorollaryId::CcOrder: return "cc-order";
        case CorollaryId::DerivReHalf: return "deriv-re-half";
    }
    return "?";
}

CorollaryId parse_corollary(std::string_view name) {
    for (auto id : {CorollaryId::HalfplaneCRatio, CorollaryId::ReHalf, CorollaryId::CcOrder,
                    CorollaryId::DerivReHalf}) {
        if (to_string(id) == name) return id;
    }
    throw UnknownCorollary("unknown corollary '" + std::string(name) + "'");
}

CheckOutcome check_corollary(CorollaryId id, double kappa, double c) {
    CheckOutcome out;
    out.branch = std::string(to_string(id));
    switch (id) {
        case CorollaryId::HalfplaneCRatio:
            // Re u_p > c / (c - 1).
            out.slacks.emplace_back("c<=0", -c);
            out.slacks.emplace_back("kappa", 2.0 * kappa - (2.0 + c * c));
            if (c <= 0.0) {
                out.implied_pair = JanowskiPair(-(c + 1.0) / (c - 1.0), -1.0);
                out.threshold = c / (c - 1.0);
            } else {
                out.notes.emplace_back("precondition c <= 0 violated");
            }
            break;
        case CorollaryId::ReHalf:
            // Re u_p > 1/2.
            out.slacks.emplace_back("kappa", c <= 0.0 ? kappa - 1.0 : kappa - 1.0 - c / 2.0);
            out.implied_pair = JanowskiPair(0.0, -1.0);
            out.threshold = 0.5;
            break;
        case CorollaryId::CcOrder: {
            // Re (-4 kappa / c) u_p' > (c + 1) / c.
            if (!(c <= -1.0)) {
                out.notes.emplace_back("precondition c <= -1 violated");
                out.slacks.emplace_back("c<=-1", -1.0 - c);
                break;
            }
            double bound = c * (c + 1.0) / 2.0;
            if (c == -1.0) {
                out.notes.emplace_back("c/(2(c+1)) undefined at c = -1; term dropped");
            } else {
                bound = std::max(bound, c / (2.0 * (c + 1.0)));
            }
            out.slacks.emplace_back("kappa", kappa - bound);
            out.implied_pair = JanowskiPair(-(c + 2.0) / c, -1.0);
            out.threshold = (c + 1.0) / c;
            break;
        }
        case CorollaryId::DerivReHalf:
            // Re (-4 kappa / c) u_p' > 1/2.
            if (c == 0.0) {
                out.notes.emplace_back("precondition c != 0 violated");
                out.slacks.emplace_back("c!=0", -1.0);
                break;
            }
            out.slacks.emplace_back("kappa", kappa - std::abs(c) / 2.0);
            out.implied_pair = JanowskiPair(0.0, -1.0);
            out.threshold = 0.5;
            break;
    }
    settle(out);
    return out;
}

bool McCartyReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& b) { return b.holds; });
}

McCartyReport mccarty_bounds(double p, cplx z, const EvalConfig& cfg) {
    if (!(p >= -0.5)) throw InvalidArgument("McCarty bounds need p >= -1/2");
    if (!(std::abs(z) < 1.0)) throw InvalidArgument("McCarty bounds need |z| < 1");

    const BesselParams params = make_params(p, 2.0, -1.0);
    const auto v = eval_u(params, z, 1, cfg).values;
    const double r = std::abs(z);
    const double q = 2.0 * p + 3.0;
    const double re = v[0].real();

    McCartyReport rep;
    auto& modulus = rep.checks[0];
    modulus.name = "modulus";
    modulus.bound = (4.0 * p + 6.0 + r) / (2.0 * q * (1.0 - r * r));
    modulus.observed = std::abs(v[0]);
    modulus.holds = modulus.observed <= modulus.bound + kBoundEqualityTol;

    auto& real_part = rep.checks[1];
    real_part.name = "real-part";
    real_part.bound = (p + 6.0 + r) / (4.0 * p + 6.0 + 2.0 * r + 2.0 * q * r * r);
    real_part.observed = re;
    real_part.holds = real_part.observed >= real_part.bound - kBoundEqualityTol;

    auto& deriv = rep.checks[2];
    deriv.name = "derivative";
    deriv.bound = (2.0 * re - 1.0) / (2.0 * (1.0 - r * r)) *
                  (r * r + 4.0 * q * r + 1.0) / (q * r * r + r + q);
    deriv.observed = std::abs(v[1]);
    deriv.holds = deriv.observed <= deriv.bound + kBoundEqualityTol;

    rep.notes.emplace_back("derivative bound read with numerator 2 Re i_p(z) - 1");
    return rep;
}

bool AdmissibilityProbe::valid() const {
    return std::isfinite(rho) && std::isfinite(sigma) && std::isfinite(mu) && std::isfinite(nu) &&
           sigma <= -(1.0 + rho * rho) / 2.0 && sigma + mu <= 0.0 && std::abs(z) < 1.0;
}

std::string_view to_string(PsiForm form) {
    return form == PsiForm::Subordination ? "subordination" : "convexity";
}

PsiForm parse_psi_form(std::string_view name) {
    if (name == "subordination") return PsiForm::Subordination;
    if (name == "convexity") return PsiForm::Convexity;
    throw InvalidArgument("unknown functional '" + std::string(name) + "'");
}

cplx eval_psi(PsiForm form, const JanowskiPair& pair, double kappa, double c,
              const AdmissibilityProbe& probe) {
    if (!probe.valid()) throw InvalidArgument("admissibility probe violates its constraints");
    const double A = pair.A();
    const double B = pair.B();
    const double AmB = A - B;
    const cplx r{0.0, probe.rho};
    const cplx z = probe.z;
    const double s = probe.sigma;

    if (form == PsiForm::Subordination) {
        const cplx t{probe.mu, probe.nu};
        const cplx den = (1.0 - B) + (1.0 + B) * r;
        if (std::abs(den) < 1e-14) throw DegenerateDenominator("(1-B) + (1+B) r vanishes");
        return t - 2.0 * (1.0 + B) * s * s / den + kappa * s +
               den * ((1.0 - A) + (1.0 + A) * r) * c * z / (8.0 * AmB);
    }

    const cplx f1 = AmB / 2.0 + kappa * (1.0 + B) / 2.0 + c * z * (1.0 + B) * (1.0 + B) / (8.0 * AmB);
    const cplx f2 = -AmB - kappa * B + c * (1.0 - B * B) / (4.0 * AmB) * z;
    const cplx f3 = AmB / 2.0 - kappa * (1.0 - B) / 2.0 + c * z * (1.0 - B) * (1.0 - B) / (8.0 * AmB);
    return s + f1 * r * r + f2 * r + f3;
}

}  // namespace gbessel
