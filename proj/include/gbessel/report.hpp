#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "gbessel/bessel.hpp"
#include "gbessel/conditions.hpp"
#include "gbessel/verifier.hpp"

namespace gbessel::report {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kScanCsvHeader =
    "kappa,c,checker,branch,corollary,numeric,min_margin,witness_re,witness_im";

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,           // holds / satisfied
    kNegative = 1,     // not satisfied / counterexample
    kUsage = 2,
    kNumeric = 3,      // NoConvergence, InvalidKappa, ...
};

nlohmann::json to_json(cplx z);
nlohmann::json to_json(const BesselParams& p);
nlohmann::json to_json(const JanowskiPair& pair);
nlohmann::json to_json(const CheckOutcome& o);
nlohmann::json to_json(const EvalResult& r);
nlohmann::json to_json(const SampleGrid& g);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const McCartyReport& r);
nlohmann::json to_json(const AdmissibilityResult& r);
nlohmann::json to_json(const ScanRow& row);

/// {schema_version, command: {verb, argv}, timestamp, payload}.
nlohmann::json envelope(const std::string& verb, const std::vector<std::string>& argv,
                        nlohmann::json payload);

/// Current UTC time as RFC 3339, e.g. "2026-10-16T08:30:00Z".
std::string rfc3339_now();

/// 17 significant digits; parses back to the identical double.
std::string format_double(double v);

/// Writes kScanCsvHeader and one line per row. Throws InvalidArgument for
/// empty `rows` before writing anything.
void emit_scan_csv(const std::vector<ScanRow>& rows, std::ostream& sink);

/// Runs one CLI invocation; `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbessel::report
