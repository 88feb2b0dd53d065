#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "gbessel/error.hpp"
#include "gbessel/report.hpp"

using namespace gbessel;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = report::run(args, out, err);
    return {code, out.str(), err.str()};
}

json payload_of(const Outcome& o) { return json::parse(o.out).at("payload"); }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> v;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) v.push_back(cell);
    return v;
}

const std::vector<std::string> kSmallScan{"scan",    "--selector", "u",      "--A",     "0",
                                          "--B",     "-1",         "--kappa", "1,5,9",  "--c",
                                          "-3,0,7",  "--radii",    "8",       "--angles", "64"};

}  // namespace

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
        CHECK(std::stod(report::format_double(v)) == v);
    }
    CHECK(report::format_double(0.5) == "0.5");
}

TEST_CASE("envelope shape") {
    const auto o = cli({"eval", "--p", "0.5", "--b", "1", "--c", "1", "--z", "1,0"});
    REQUIRE(o.code == report::kOk);
    const json j = json::parse(o.out);
    CHECK(j.at("schema_version") == "1");
    CHECK(j.at("command").at("verb") == "eval");
    CHECK(j.at("command").at("argv").size() == 9);
    const std::string ts = j.at("timestamp");
    CHECK(ts.size() == 20);
    CHECK(ts.back() == 'Z');
    CHECK(ts[10] == 'T');
    CHECK(j.at("payload").at("value").at("re").get<double>() == doctest::Approx(0.8414709848078965).epsilon(1e-14));
    CHECK(j.at("payload").at("value").at("im").get<double>() == 0.0);
}

TEST_CASE("exit codes") {
    CHECK(cli({"eval", "--p", "-2", "--b", "1", "--c", "1", "--z", "0.5,0"}).code == report::kNumeric);
    CHECK(cli({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "2,0"}).code == report::kUsage);
    CHECK(cli({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "nope"}).code == report::kUsage);
    CHECK(cli({"eval", "--p", "0", "--b", "1", "--c", "1", "--z", "0.5,0", "--max-terms", "2"}).code ==
          report::kNumeric);
    CHECK(cli({"frobnicate"}).code == report::kUsage);
    CHECK(cli({}).code == report::kUsage);
    CHECK(cli({"--help"}).code == report::kOk);

    CHECK(cli({"check", "--theorem", "subordination", "--A", "0", "--B", "-1", "--kappa", "2", "--c", "-1"}).code ==
          report::kOk);
    CHECK(cli({"check", "--theorem", "subordination", "--A", "0", "--B", "-1", "--kappa", "1", "--c", "-1"}).code ==
          report::kNegative);
    CHECK(cli({"check", "--theorem", "derivative", "--A", "0", "--B", "-1", "--kappa", "1", "--c", "0"}).code ==
          report::kUsage);
    CHECK(cli({"check", "--theorem", "starlike", "--A", "0", "--kappa", "1", "--c", "0"}).code == report::kUsage);
    CHECK(cli({"check", "--kappa", "1", "--c", "0"}).code == report::kUsage);
    CHECK(cli({"check", "--theorem", "starlike", "--corollary", "re-half", "--A", "0", "--B", "-1", "--kappa", "1",
               "--c", "0"})
              .code == report::kUsage);
    CHECK(cli({"check", "--theorem", "subordination", "--A", "0", "--B", "0.5", "--kappa", "2", "--c", "-1"}).code ==
          report::kUsage);
    CHECK(cli({"check", "--corollary", "re-half", "--kappa", "1", "--c", "-1"}).code == report::kOk);
    CHECK(cli({"check", "--corollary", "cc-order", "--kappa", "1", "--c", "0"}).code == report::kNegative);

    CHECK(cli({"verify", "--selector", "u", "--A", "0", "--B", "-1", "--p", "0", "--b", "2", "--c", "-1", "--radii",
               "6", "--angles", "32"})
              .code == report::kOk);
    CHECK(cli({"verify", "--selector", "u", "--A", "0", "--B", "-1", "--p", "-0.5", "--b", "1", "--c", "6",
               "--radii", "6", "--angles", "32"})
              .code == report::kNegative);
    CHECK(cli({"verify", "--selector", "u", "--A", "0", "--B", "-1", "--p", "0", "--b", "2", "--c", "-1", "--format",
               "csv"})
              .code == report::kUsage);

    CHECK(cli({"bounds", "--p", "1", "--z", "0.5,0"}).code == report::kOk);
    CHECK(cli({"bounds", "--p", "-1", "--z", "0.5,0"}).code == report::kUsage);
    CHECK(cli({"admissibility", "--form", "subordination", "--A", "0", "--B", "-1", "--kappa", "2", "--c", "-1",
               "--radii", "4", "--angles", "16"})
              .code == report::kOk);
}

TEST_CASE("check payload carries slacks and branch") {
    const auto o = cli({"check", "--theorem", "subordination", "--A", "0", "--B", "-1", "--kappa", "2", "--c", "-1"});
    const json p = payload_of(o);
    CHECK(p.at("satisfied") == true);
    CHECK(p.at("branch") == "low-B:endpoint");
    REQUIRE(p.at("slacks").size() == 3);
    CHECK(p.at("slacks")[0].at("label") == "base");
    CHECK(p.at("slacks")[0].at("slack") == 1.0);
    CHECK(p.at("slacks")[1].at("slack") == 3.0);
    CHECK(p.at("slacks")[2].at("slack") == 0.5);
}

TEST_CASE("payloads are byte-identical across runs and thread counts") {
    auto strip = [](const std::string& text) {
        json j = json::parse(text);
        j.erase("timestamp");
        return j.dump();
    };
    auto args = kSmallScan;
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(strip(a.out) == strip(b.out));
    args.insert(args.end(), {"--threads", "3"});
    const auto c = cli(args);
    CHECK(payload_of(a).dump() == payload_of(c).dump());

    const std::vector<std::string> v{"verify", "--selector", "convexity", "--A", "0.5", "--B", "-0.5", "--p",
                                     "1",      "--b",        "1",         "--c", "2"};
    CHECK(strip(cli(v).out) == strip(cli(v).out));
}

TEST_CASE("JSON round-trip is lossless") {
    const auto o = cli({"verify", "--selector", "starlike-zu", "--A", "0.3", "--B", "-0.7", "--p", "1.1", "--b", "1",
                        "--c", "-2.3"});
    const json j = json::parse(o.out);
    CHECK(json::parse(j.dump()) == j);
    CHECK(json::parse(j.dump(2)) == j);
}

TEST_CASE("scan CSV") {
    auto args = kSmallScan;
    args.insert(args.end(), {"--format", "csv"});
    const auto o = cli(args);
    CHECK(o.code == report::kOk);
    const auto rows = lines(o.out);
    REQUIRE(rows.size() == 64);
    CHECK(rows[0] == report::kScanCsvHeader);
    CHECK(rows[0] == "kappa,c,checker,branch,corollary,numeric,min_margin,witness_re,witness_im");

    // kappa = 1, c = -1 is the fifth cell in row-major order.
    const auto gap = split(rows[5]);
    REQUIRE(gap.size() == 9);
    CHECK(gap[0] == "1");
    CHECK(gap[1] == "-1");
    CHECK(gap[2] == "false");
    CHECK(gap[4] == "true");
    CHECK(gap[5] == "holds");

    // CSV and JSON carry the same numbers.
    const auto j = payload_of(cli(kSmallScan)).at("rows");
    REQUIRE(j.size() == 63);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto cells = split(rows[i + 1]);
        CHECK(std::stod(cells[0]) == j[i].at("kappa").get<double>());
        CHECK(std::stod(cells[1]) == j[i].at("c").get<double>());
        CHECK((cells[2] == "true") == j[i].at("checker").get<bool>());
        CHECK(cells[3] == j[i].at("branch").get<std::string>());
        CHECK(std::stod(cells[6]) == j[i].at("min_margin").get<double>());
        CHECK(std::stod(cells[7]) == j[i].at("witness").at("re").get<double>());
        CHECK(std::stod(cells[8]) == j[i].at("witness").at("im").get<double>());
    }
}

TEST_CASE("empty scan emits nothing") {
    std::ostringstream sink;
    CHECK_THROWS_AS(report::emit_scan_csv({}, sink), InvalidArgument);
    CHECK(sink.str().empty());

    const auto dir = std::filesystem::temp_directory_path() / "gbessel_report_test";
    std::filesystem::create_directories(dir);
    const auto target = dir / "scan.csv";
    std::filesystem::remove(target);
    auto args = kSmallScan;
    args[8] = "1,5,1";
    args.insert(args.end(), {"--format", "csv", "--out", target.string()});
    CHECK(cli(args).code == report::kUsage);
    CHECK_FALSE(std::filesystem::exists(target));
    auto partial = target;
    partial += ".partial";
    CHECK_FALSE(std::filesystem::exists(partial));

    args = kSmallScan;
    args.insert(args.end(), {"--format", "csv", "--out", target.string()});
    const auto o = cli(args);
    CHECK(o.code == report::kOk);
    CHECK(o.out.empty());
    std::ifstream f(target);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(lines(content.str()).size() == 64);
    CHECK_FALSE(std::filesystem::exists(partial));
    std::filesystem::remove_all(dir);
}
