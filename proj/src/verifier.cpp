#include "gbessel/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "gbessel/error.hpp"

namespace gbessel {

void SampleGrid::validate() const {
    if (angles < 8) throw InvalidArgument("grid needs at least 8 angles");
    if (radii.empty()) throw InvalidArgument("grid needs at least one radius");
    if (!(max_radius > 0.0 && max_radius < 1.0)) throw InvalidArgument("max_radius must lie in (0, 1)");
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev)) throw InvalidArgument("grid radii must be positive and strictly increasing");
        prev = r;
    }
    if (prev > max_radius) throw InvalidArgument("grid radius exceeds max_radius");
}

SampleGrid SampleGrid::geometric(int count, double inner, double outer, int angles) {
    if (count < 1) throw InvalidArgument("grid needs at least one radius");
    SampleGrid g;
    g.angles = angles;
    g.max_radius = outer;
    g.radii.resize(static_cast<std::size_t>(count));
    if (count == 1) {
        g.radii[0] = outer;
    } else {
        const double ratio = std::log(outer / inner) / (count - 1);
        for (int i = 0; i < count; ++i) g.radii[i] = inner * std::exp(ratio * i);
        g.radii.back() = outer;
    }
    g.validate();
    return g;
}

SampleGrid SampleGrid::standard() { return geometric(24, 0.05, 0.999, 256); }

std::string_view to_string(PropertySelector s) {
    switch (s) {
        case PropertySelector::U: return "u";
        case PropertySelector::DerivNormalized: return "deriv-normalized";
        case PropertySelector::Convexity: return "convexity";
        case PropertySelector::StarlikeZu: return "starlike-zu";
    }
    return "?";
}

PropertySelector parse_selector(std::string_view name) {
    for (auto s : {PropertySelector::U, PropertySelector::DerivNormalized,
                   PropertySelector::Convexity, PropertySelector::StarlikeZu}) {
        if (to_string(s) == name) return s;
    }
    throw InvalidArgument("unknown selector '" + std::string(name) + "'");
}

std::string_view to_string(Verdict v) {
    return v == Verdict::HoldsOnGrid ? "holds-on-grid" : "counterexample";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    pool.clear();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

struct Sample {
    double margin = 0.0;
    bool degenerate = false;
};

class Functional {
public:
    Functional(PropertySelector sel, const JanowskiPair& pair, const BesselParams& params,
               const EvalConfig& cfg)
        : sel_(sel), pair_(pair), region_(target_region(pair)), params_(params), cfg_(cfg) {
        if (sel == PropertySelector::DerivNormalized && params.c() == 0.0) {
            throw ZeroC("deriv-normalized selector needs c != 0");
        }
    }

    [[nodiscard]] Sample at(cplx z) const {
        const int order = sel_ == PropertySelector::U           ? 0
                          : sel_ == PropertySelector::Convexity ? 2
                                                                : 1;
        const auto v = eval_u(params_, z, order, cfg_).values;
        cplx w;
        switch (sel_) {
            case PropertySelector::U:
                w = v[0];
                break;
            case PropertySelector::DerivNormalized:
                w = (-4.0 * params_.kappa() / params_.c()) * v[1];
                break;
            case PropertySelector::Convexity:
                if (std::abs(v[1]) < kDegeneracyTol) return {0.0, true};
                w = 1.0 + z * v[2] / v[1];
                break;
            case PropertySelector::StarlikeZu:
                if (std::abs(v[0]) < kDegeneracyTol) return {0.0, true};
                w = 1.0 + z * v[1] / v[0];
                break;
        }
        // (1 + B) w = 1 + A is the excluded value of every conclusion.
        if (std::abs((1.0 + pair_.B()) * w - (1.0 + pair_.A())) < kDegeneracyTol) return {0.0, true};
        const double m = margin(region_, w);
        if (std::isnan(m)) return {0.0, true};
        return {m, false};
    }

private:
    PropertySelector sel_;
    JanowskiPair pair_;
    TargetRegion region_;
    BesselParams params_;
    EvalConfig cfg_;
};

cplx on_circle(double r, double theta) { return std::polar(r, theta); }

}  // namespace

VerificationReport verify_membership(PropertySelector selector, const JanowskiPair& pair,
                                     const BesselParams& params, const SampleGrid& grid,
                                     const VerifyOptions& opts) {
    grid.validate();
    const Functional f(selector, pair, params, opts.eval);
    const std::size_t nr = grid.radii.size();
    const std::size_t na = static_cast<std::size_t>(grid.angles);
    const double step = kTwoPi / static_cast<double>(na);

    std::vector<Sample> samples(nr * na);
    parallel_for(nr, opts.threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < na; ++j) {
            samples[i * na + j] = f.at(on_circle(grid.radii[i], step * static_cast<double>(j)));
        }
    });

    VerificationReport rep;
    rep.selector = selector;
    rep.pair = pair;
    rep.params = params;
    rep.grid = grid;
    rep.min_margin = std::numeric_limits<double>::infinity();

    std::size_t best = samples.size();
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const Sample& s = samples[k];
        const cplx z = on_circle(grid.radii[k / na], step * static_cast<double>(k % na));
        if (s.degenerate) {
            rep.degeneracy_hits.push_back(z);
        } else if (s.margin < rep.min_margin) {
            rep.min_margin = s.margin;
            rep.witness = z;
            best = k;
        }
    }

    if (best == samples.size()) {
        rep.min_margin = -std::numeric_limits<double>::infinity();
    } else if (opts.refine_factor > 1) {
        const double r = grid.radii[best / na];
        const double fine = step / opts.refine_factor;
        double theta = step * static_cast<double>(best % na);
        auto probe = [&](double t, double& m_out) {
            const Sample s = f.at(on_circle(r, t));
            if (s.degenerate) {
                rep.degeneracy_hits.push_back(on_circle(r, t));
                return false;
            }
            m_out = s.margin;
            return true;
        };
        double center = theta;
        for (int k = -(opts.refine_factor - 1); k < opts.refine_factor; ++k) {
            if (k == 0) continue;
            const double t = center + fine * k;
            double m;
            if (probe(t, m) && m < rep.min_margin) {
                rep.min_margin = m;
                theta = t;
            }
        }
        // Golden-section polish inside one fine step on either side.
        constexpr double kInvPhi = 0.6180339887498949;
        double lo = theta - fine;
        double hi = theta + fine;
        double x1 = hi - kInvPhi * (hi - lo);
        double x2 = lo + kInvPhi * (hi - lo);
        double f1 = 0.0;
        double f2 = 0.0;
        bool ok = probe(x1, f1) && probe(x2, f2);
        for (int it = 0; ok && it < 60; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kInvPhi * (hi - lo);
                ok = probe(x1, f1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kInvPhi * (hi - lo);
                ok = probe(x2, f2);
            }
        }
        if (ok) {
            const double t = f1 < f2 ? x1 : x2;
            const double m = std::min(f1, f2);
            if (m < rep.min_margin) {
                rep.min_margin = m;
                theta = t;
            }
        }
        rep.witness = on_circle(r, theta);
    }

    rep.verdict = (rep.min_margin < 0.0 || !rep.degeneracy_hits.empty()) ? Verdict::Counterexample
                                                                         : Verdict::HoldsOnGrid;
    return rep;
}

double property_radius(PropertySelector selector, const JanowskiPair& pair,
                       const BesselParams& params, int grid_density, double tol,
                       double max_radius, const VerifyOptions& opts) {
    if (grid_density < 1) throw InvalidArgument("grid_density must be positive");
    if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
    if (!(max_radius > 0.01 && max_radius < 1.0)) throw InvalidArgument("max_radius must lie in (0.01, 1)");

    auto holds = [&](double r) {
        SampleGrid g;
        g.max_radius = r;
        g.angles = std::max(8, 8 * grid_density);
        for (int k = 1; k <= grid_density; ++k) g.radii.push_back(r * k / grid_density);
        g.radii.back() = r;
        return verify_membership(selector, pair, params, g, opts).verdict == Verdict::HoldsOnGrid;
    };

    if (!holds(0.01)) return 0.0;
    if (holds(max_radius)) return max_radius;
    double lo = 0.01;
    double hi = max_radius;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? lo : hi) = mid;
    }
    return lo;
}

AdmissibilityResult admissibility_scan(PsiForm form, const JanowskiPair& pair, double kappa,
                                       double c, double rho_max, int sigma_depth,
                                       const SampleGrid& z_grid) {
    if (!(rho_max > 0.0)) throw InvalidArgument("rho_max must be positive");
    if (sigma_depth < 2) throw InvalidArgument("sigma_depth must be at least 2");
    z_grid.validate();

    std::vector<cplx> zs{cplx{0.0, 0.0}};
    const double step = kTwoPi / z_grid.angles;
    for (double r : z_grid.radii) {
        for (int j = 0; j < z_grid.angles; ++j) zs.push_back(on_circle(r, step * j));
    }

    constexpr int kRhoPoints = 201;
    const std::vector<double> mu_factors =
        form == PsiForm::Subordination ? std::vector<double>{0.0, 0.5, 1.0} : std::vector<double>{0.0};

    AdmissibilityResult res;
    res.max_re = -std::numeric_limits<double>::infinity();
    for (const cplx z : zs) {
        for (int i = 0; i < kRhoPoints; ++i) {
            const double rho = -rho_max + 2.0 * rho_max * i / (kRhoPoints - 1);
            for (int k = 0; k < sigma_depth; ++k) {
                const double sigma = -(1.0 + 0.5 * k) * (1.0 + rho * rho) / 2.0;
                for (double m : mu_factors) {
                    AdmissibilityProbe probe{rho, sigma, -m * sigma, 0.0, z};
                    const double re = eval_psi(form, pair, kappa, c, probe).real();
                    ++res.probes_evaluated;
                    if (re > res.max_re) {
                        res.max_re = re;
                        res.probe = probe;
                    }
                }
            }
        }
    }
    return res;
}

double AxisRange::at(int i) const {
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::optional<bool> ScanRow::corollary_verdict() const {
    if (corollaries.empty()) return std::nullopt;
    return std::any_of(corollaries.begin(), corollaries.end(), [](const auto& c) { return c.second; });
}

CheckOutcome theorem_for(PropertySelector selector, const JanowskiPair& pair, double kappa,
                         double c, ProductReading reading) {
    switch (selector) {
        case PropertySelector::U: return check_subordination_theorem(pair, kappa, c);
        case PropertySelector::DerivNormalized: return check_derivative_theorem(pair, kappa, c);
        case PropertySelector::Convexity: return check_convexity_theorem(pair, kappa, c, reading);
        case PropertySelector::StarlikeZu: return check_starlike_theorem(pair, kappa, c, reading);
    }
    throw InvalidArgument("unknown selector");
}

namespace {

bool same_pair(const JanowskiPair& a, const JanowskiPair& b) {
    return std::abs(a.A() - b.A()) <= 1e-12 && a.B() == b.B();
}

std::vector<std::pair<CorollaryId, bool>> applicable_corollaries(PropertySelector selector,
                                                                 const JanowskiPair& pair,
                                                                 double kappa, double c) {
    std::vector<CorollaryId> candidates;
    if (selector == PropertySelector::U) {
        candidates = {CorollaryId::HalfplaneCRatio, CorollaryId::ReHalf};
    } else if (selector == PropertySelector::DerivNormalized) {
        candidates = {CorollaryId::CcOrder, CorollaryId::DerivReHalf};
    }
    std::vector<std::pair<CorollaryId, bool>> out;
    for (CorollaryId id : candidates) {
        const CheckOutcome o = check_corollary(id, kappa, c);
        if (o.implied_pair && same_pair(*o.implied_pair, pair)) out.emplace_back(id, o.satisfied);
    }
    return out;
}

}  // namespace

std::vector<ScanRow> region_scan(PropertySelector selector, const JanowskiPair& pair,
                                 const AxisRange& kappa_range, const AxisRange& c_range,
                                 const SampleGrid& grid, const ScanOptions& opts) {
    if (kappa_range.steps < 2 || c_range.steps < 2) throw InvalidArgument("scan axes need at least 2 steps");
    grid.validate();

    const std::size_t nc = static_cast<std::size_t>(c_range.steps);
    std::vector<ScanRow> rows(static_cast<std::size_t>(kappa_range.steps) * nc);
    VerifyOptions cell_opts = opts.verify;
    cell_opts.threads = 1;

    parallel_for(rows.size(), opts.verify.threads, [&](std::size_t idx) {
        ScanRow& row = rows[idx];
        row.kappa = kappa_range.at(static_cast<int>(idx / nc));
        row.c = c_range.at(static_cast<int>(idx % nc));
        row.checker = theorem_for(selector, pair, row.kappa, row.c, opts.reading);
        row.corollaries = applicable_corollaries(selector, pair, row.kappa, row.c);
        const auto rep =
            verify_membership(selector, pair, params_from_kappa(row.kappa, row.c), grid, cell_opts);
        row.numeric = rep.verdict;
        row.min_margin = rep.min_margin;
        row.witness = rep.witness;
        row.degeneracy_hits = rep.degeneracy_hits.size();
    });
    return rows;
}

}  // namespace gbessel
