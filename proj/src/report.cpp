#include "gbessel/report.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gbessel/error.hpp"

namespace gbessel::report {

using nlohmann::json;

json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const BesselParams& p) {
    return json{{"p", p.p()}, {"b", p.b()}, {"c", p.c()}, {"kappa", p.kappa()}};
}

json to_json(const JanowskiPair& pair) { return json{{"A", pair.A()}, {"B", pair.B()}}; }

json to_json(const CheckOutcome& o) {
    json slacks = json::array();
    for (const auto& [label, value] : o.slacks) slacks.push_back({{"label", label}, {"slack", value}});
    json j{{"satisfied", o.satisfied}, {"branch", o.branch}, {"slacks", slacks}, {"notes", o.notes}};
    if (o.implied_pair) j["implied_pair"] = to_json(*o.implied_pair);
    if (o.threshold) j["threshold"] = *o.threshold;
    return j;
}

json to_json(const EvalResult& r) {
    json values = json::array();
    for (const cplx& v : r.values) values.push_back(to_json(v));
    return json{{"value", to_json(r.values.front())},
                {"values", values},
                {"terms_used", r.terms_used},
                {"truncation_estimate", r.truncation_estimate}};
}

json to_json(const SampleGrid& g) {
    return json{{"radii", g.radii}, {"angles", g.angles}, {"max_radius", g.max_radius}};
}

json to_json(const VerificationReport& r) {
    json hits = json::array();
    for (const cplx& z : r.degeneracy_hits) hits.push_back(to_json(z));
    return json{{"selector", std::string(to_string(r.selector))},
                {"pair", to_json(r.pair)},
                {"params", to_json(r.params)},
                {"verdict", std::string(to_string(r.verdict))},
                {"min_margin", r.min_margin},
                {"witness", to_json(r.witness)},
                {"grid", to_json(r.grid)},
                {"degeneracy_hits", hits}};
}

json to_json(const McCartyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"bound", c.bound}, {"observed", c.observed}, {"holds", c.holds}});
    }
    return json{{"checks", checks}, {"all_hold", r.all_hold()}, {"notes", r.notes}};
}

json to_json(const AdmissibilityResult& r) {
    const auto& p = r.probe;
    return json{{"max_re", r.max_re},
                {"admissible", r.max_re < 0.0},
                {"probe", {{"rho", p.rho}, {"sigma", p.sigma}, {"mu", p.mu}, {"nu", p.nu}, {"z", to_json(p.z)}}},
                {"probes_evaluated", r.probes_evaluated}};
}

json to_json(const ScanRow& row) {
    json cors = json::array();
    for (const auto& [id, ok] : row.corollaries) cors.push_back({{"id", std::string(to_string(id))}, {"satisfied", ok}});
    const auto cv = row.corollary_verdict();
    return json{{"kappa", row.kappa},
                {"c", row.c},
                {"checker", row.checker.satisfied},
                {"branch", row.checker.branch},
                {"corollary", cv ? json(*cv) : json(nullptr)},
                {"corollaries", cors},
                {"numeric", std::string(to_string(row.numeric))},
                {"min_margin", row.min_margin},
                {"witness", to_json(row.witness)},
                {"degeneracy_hits", row.degeneracy_hits}};
}

json envelope(const std::string& verb, const std::vector<std::string>& argv, json payload) {
    return json{{"schema_version", kSchemaVersion},
                {"command", {{"verb", verb}, {"argv", argv}}},
                {"timestamp", rfc3339_now()},
                {"payload", std::move(payload)}};
}

std::string rfc3339_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_scan_csv(const std::vector<ScanRow>& rows, std::ostream& sink) {
    if (rows.empty()) throw InvalidArgument("no scan rows to emit");
    std::ostringstream buf;
    buf << kScanCsvHeader << '\n';
    for (const ScanRow& r : rows) {
        const auto cv = r.corollary_verdict();
        buf << format_double(r.kappa) << ',' << format_double(r.c) << ','
            << (r.checker.satisfied ? "true" : "false") << ',' << r.checker.branch << ','
            << (cv ? (*cv ? "true" : "false") : "na") << ','
            << (r.numeric == Verdict::HoldsOnGrid ? "holds" : "counterexample") << ','
            << format_double(r.min_margin) << ',' << format_double(r.witness.real()) << ','
            << format_double(r.witness.imag()) << '\n';
    }
    sink << buf.str();
    if (!sink) throw Error("failed writing scan CSV");
}

namespace {

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidArgument("expected re,im but got '" + s + "'");
    try {
        std::size_t n1 = 0;
        std::size_t n2 = 0;
        const std::string re = s.substr(0, comma);
        const std::string im = s.substr(comma + 1);
        const double a = std::stod(re, &n1);
        const double b = std::stod(im, &n2);
        if (n1 != re.size() || n2 != im.size()) throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw InvalidArgument("expected re,im but got '" + s + "'");
    }
}

AxisRange parse_range(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw InvalidArgument("expected lo,hi,steps but got '" + s + "'");
    try {
        AxisRange r{std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2])};
        if (r.steps < 2) throw InvalidArgument("a scan axis needs at least 2 steps");
        return r;
    } catch (const std::logic_error&) {
        throw InvalidArgument("expected lo,hi,steps but got '" + s + "'");
    }
}

ProductReading parse_reading(const std::string& s) {
    if (s == "as-printed") return ProductReading::AsPrinted;
    if (s == "conservative") return ProductReading::Conservative;
    throw InvalidArgument("reading must be as-printed or conservative");
}

struct GridFlags {
    int radii = 24;
    double inner = 0.05;
    double max_radius = 0.999;
    int angles = 256;

    void attach(CLI::App* cmd) {
        cmd->add_option("--radii", radii, "number of sample circles")->capture_default_str();
        cmd->add_option("--inner", inner, "innermost circle radius")->capture_default_str();
        cmd->add_option("--max-radius", max_radius, "outermost circle radius")->capture_default_str();
        cmd->add_option("--angles", angles, "sample points per circle")->capture_default_str();
    }
    [[nodiscard]] SampleGrid grid() const { return SampleGrid::geometric(radii, inner, max_radius, angles); }
};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << text;
        if (!f) throw InvalidArgument("cannot write '" + path + "'");
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Bessel functions u_{p,b,c}: evaluation, Janowski-class condition checks "
                 "and sampled verification"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    int threads = 1;
    EvalConfig cfg;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output file (default: standard output)");
        cmd->add_option("--rel-tol", cfg.rel_tol, "series stopping tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--max-terms", cfg.max_terms, "series term cap")->check(CLI::PositiveNumber);
    };

    double p = 0.0;
    double b = 0.0;
    double c = 0.0;
    double A = 0.0;
    double B = 0.0;
    double kappa = 0.0;
    std::string z_text;
    std::string selector_name;
    std::string reading_name = "conservative";
    GridFlags grid_flags;

    auto* eval = app.add_subcommand("eval", "evaluate u and its derivatives");
    common(eval);
    int order = 0;
    eval->add_option("--p", p)->required();
    eval->add_option("--b", b)->required();
    eval->add_option("--c", c)->required();
    eval->add_option("--z", z_text, "re,im")->required();
    eval->add_option("--order", order)->check(CLI::Range(0, 3));

    auto* check = app.add_subcommand("check", "evaluate a theorem or corollary hypothesis");
    common(check);
    std::string theorem;
    std::string corollary;
    auto* th_opt = check->add_option("--theorem", theorem)
                       ->check(CLI::IsMember({"subordination", "derivative", "convexity", "starlike"}));
    auto* co_opt = check->add_option("--corollary", corollary)
                       ->check(CLI::IsMember({"halfplane-c-ratio", "re-half", "cc-order", "deriv-re-half"}));
    th_opt->excludes(co_opt);
    check->add_option("--A", A);
    check->add_option("--B", B);
    check->add_option("--kappa", kappa)->required();
    check->add_option("--c", c)->required();
    check->add_option("--reading", reading_name)->check(CLI::IsMember({"as-printed", "conservative"}));

    const std::vector<std::string> selectors{"u", "deriv-normalized", "convexity", "starlike-zu"};
    auto* verify = app.add_subcommand("verify", "sample the disk and test the inclusion");
    common(verify);
    verify->add_option("--selector", selector_name)->required()->check(CLI::IsMember(selectors));
    verify->add_option("--A", A)->required();
    verify->add_option("--B", B)->required();
    verify->add_option("--p", p)->required();
    verify->add_option("--b", b)->required();
    verify->add_option("--c", c)->required();
    verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
    grid_flags.attach(verify);

    auto* radius = app.add_subcommand("radius", "largest disk on which the inclusion holds");
    common(radius);
    int density = 32;
    double tol = 1e-4;
    double radius_cap = 0.999;
    radius->add_option("--selector", selector_name)->required()->check(CLI::IsMember(selectors));
    radius->add_option("--A", A)->required();
    radius->add_option("--B", B)->required();
    radius->add_option("--p", p)->required();
    radius->add_option("--b", b)->required();
    radius->add_option("--c", c)->required();
    radius->add_option("--density", density)->check(CLI::PositiveNumber);
    radius->add_option("--tol", tol)->check(CLI::PositiveNumber);
    radius->add_option("--max-radius", radius_cap);

    auto* scan = app.add_subcommand("scan", "sweep (kappa, c) and compare checker with sampling");
    common(scan);
    std::string kappa_text;
    std::string c_text;
    scan->add_option("--selector", selector_name)->required()->check(CLI::IsMember(selectors));
    scan->add_option("--A", A)->required();
    scan->add_option("--B", B)->required();
    scan->add_option("--kappa", kappa_text, "lo,hi,steps")->required();
    scan->add_option("--c", c_text, "lo,hi,steps")->required();
    scan->add_option("--reading", reading_name)->check(CLI::IsMember({"as-printed", "conservative"}));
    scan->add_option("--threads", threads)->check(CLI::PositiveNumber);
    grid_flags.attach(scan);

    auto* adm = app.add_subcommand("admissibility", "maximize Re Psi over the admissibility set");
    common(adm);
    std::string form_name;
    double rho_max = 10.0;
    int sigma_depth = 4;
    adm->add_option("--form", form_name)->required()->check(CLI::IsMember({"subordination", "convexity"}));
    adm->add_option("--A", A)->required();
    adm->add_option("--B", B)->required();
    adm->add_option("--kappa", kappa)->required();
    adm->add_option("--c", c)->required();
    adm->add_option("--rho-max", rho_max)->check(CLI::PositiveNumber);
    adm->add_option("--sigma-depth", sigma_depth)->check(CLI::Range(2, 1000));
    grid_flags.attach(adm);

    auto* bounds = app.add_subcommand("bounds", "McCarty-type bounds for i_p = u_{p,2,-1}");
    common(bounds);
    bounds->add_option("--p", p)->required();
    bounds->add_option("--z", z_text, "re,im")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string verb = cmd->get_name();

    try {
        if (format == "csv" && verb != "scan") throw InvalidArgument("csv output is only available for scan");
        if (verb == "check" && theorem.empty() && corollary.empty()) {
            throw InvalidArgument("check needs --theorem or --corollary");
        }
        if (verb == "check" && !theorem.empty() && (check->count("--A") == 0 || check->count("--B") == 0)) {
            throw InvalidArgument("--theorem needs --A and --B");
        }

        json payload;
        int code = kOk;

        if (verb == "eval") {
            const BesselParams params = make_params(p, b, c);
            const cplx z = parse_complex(z_text);
            const EvalResult r = eval_u(params, z, order, cfg);
            payload = to_json(r);
            payload["params"] = to_json(params);
            payload["z"] = to_json(z);
            payload["order"] = order;
        } else if (verb == "check") {
            CheckOutcome o;
            if (!theorem.empty()) {
                const JanowskiPair pair(A, B);
                const ProductReading rd = parse_reading(reading_name);
                if (theorem == "subordination") o = check_subordination_theorem(pair, kappa, c);
                else if (theorem == "derivative") o = check_derivative_theorem(pair, kappa, c);
                else if (theorem == "convexity") o = check_convexity_theorem(pair, kappa, c, rd);
                else o = check_starlike_theorem(pair, kappa, c, rd);
                payload = to_json(o);
                payload["theorem"] = theorem;
                payload["pair"] = to_json(pair);
            } else {
                o = check_corollary(parse_corollary(corollary), kappa, c);
                payload = to_json(o);
                payload["corollary"] = corollary;
            }
            payload["kappa"] = kappa;
            payload["c"] = c;
            code = o.satisfied ? kOk : kNegative;
        } else if (verb == "verify") {
            VerifyOptions vo;
            vo.eval = cfg;
            vo.threads = threads;
            const JanowskiPair pair(A, B);
            const BesselParams params = make_params(p, b, c);
            const auto rep = verify_membership(parse_selector(selector_name), pair, params, grid_flags.grid(), vo);
            payload = to_json(rep);
            code = rep.verdict == Verdict::HoldsOnGrid ? kOk : kNegative;
        } else if (verb == "radius") {
            VerifyOptions vo;
            vo.eval = cfg;
            const JanowskiPair pair(A, B);
            const BesselParams params = make_params(p, b, c);
            const double r = property_radius(parse_selector(selector_name), pair, params, density, tol, radius_cap, vo);
            payload = json{{"selector", selector_name}, {"pair", to_json(pair)}, {"params", to_json(params)},
                           {"radius", r}, {"density", density}, {"tol", tol}, {"max_radius", radius_cap}};
        } else if (verb == "scan") {
            ScanOptions so;
            so.verify.eval = cfg;
            so.verify.threads = threads;
            so.reading = parse_reading(reading_name);
            const JanowskiPair pair(A, B);
            const auto rows = region_scan(parse_selector(selector_name), pair, parse_range(kappa_text),
                                          parse_range(c_text), grid_flags.grid(), so);
            std::size_t unsound = 0;
            for (const auto& r : rows) unsound += r.unsound() ? 1 : 0;
            code = unsound == 0 ? kOk : kNegative;
            if (format == "csv") {
                std::ostringstream csv;
                emit_scan_csv(rows, csv);
                write_output(csv.str(), out_path, out);
                return code;
            }
            json jrows = json::array();
            for (const auto& r : rows) jrows.push_back(to_json(r));
            payload = json{{"selector", selector_name}, {"pair", to_json(pair)}, {"rows", jrows},
                           {"unsound_cells", unsound}, {"grid", to_json(grid_flags.grid())}};
        } else if (verb == "admissibility") {
            const JanowskiPair pair(A, B);
            const auto r = admissibility_scan(parse_psi_form(form_name), pair, kappa, c, rho_max, sigma_depth,
                                              grid_flags.grid());
            payload = to_json(r);
            payload["form"] = form_name;
            payload["pair"] = to_json(pair);
            payload["kappa"] = kappa;
            payload["c"] = c;
            code = r.max_re < 0.0 ? kOk : kNegative;
        } else if (verb == "bounds") {
            const auto rep = mccarty_bounds(p, parse_complex(z_text), cfg);
            payload = to_json(rep);
            payload["p"] = p;
            payload["z"] = to_json(parse_complex(z_text));
            code = rep.all_hold() ? kOk : kNegative;
        }

        write_output(envelope(verb, args, std::move(payload)).dump(2) + "\n", out_path, out);
        return code;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kNumeric;
    }
}

}  // namespace gbessel::report
