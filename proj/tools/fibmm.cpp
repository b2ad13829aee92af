// Command-line frontend: tables, envelopes, planar max-min values,
// alpha1 window reports, verification suites and SVG plots, all from
// the exact engine. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fibmm/report.hpp"
#include "fibmm/svg.hpp"
#include "fibmm/textio.hpp"
#include "fibmm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int cache_size_from_env() {
    const char* raw = std::getenv("FIBMM_NMAX");
    if (raw == nullptr) return fibmm::FibCache::kDefaultNMax;
    try {
        const int n = std::stoi(raw);
        if (n < 8) throw std::domain_error("");
        return n;
    } catch (const std::exception&) {
        throw std::domain_error("FIBMM_NMAX must be an integer >= 8");
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << content;
    if (!out.flush()) throw std::ios_base::failure("write to '" + path + "' failed");
}

void emit(const fibmm::ReportBundle& bundle, bool json) {
    std::cout << (json ? bundle.to_json() : bundle.to_text());
}

int run_verify(const fibmm::FibCache& cache, const std::string& suite, std::optional<int> max_arg,
               int samples, unsigned long long seed, bool json) {
    using namespace fibmm;
    ReportBundle bundle;
    bundle.command = "verify --suite " + suite;
    auto extend = [&](const std::vector<Check>& cs) {
        bundle.checks.insert(bundle.checks.end(), cs.begin(), cs.end());
    };
    const bool all = suite == "all";
    if (all || suite == "identities") extend(suite_identities(cache, max_arg.value_or(200)));
    if (all || suite == "lemma3") extend(suite_lemma3(cache, max_arg.value_or(200)));
    if (all || suite == "lemma4") extend(suite_lemma4(cache, max_arg.value_or(10)));
    if (all || suite == "props") extend(suite_props(cache, max_arg.value_or(10)));
    if (all || suite == "thm2") extend(suite_thm2(cache, max_arg.value_or(40)));
    if (all || suite == "thm3") extend(suite_thm3(cache));
    if (all || suite == "thm4") extend(suite_thm4(cache, max_arg.value_or(8)));
    if (all || suite == "windows") extend(suite_windows(cache, samples, seed));
    emit(bundle, json);
    return bundle.ok() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace fibmm;

    CLI::App app{"exact max-min toolkit for Fibonacci distance sequences"};
    app.set_version_flag("--version", std::string(kVersion));
    bool json = false;
    int digits = 12;
    app.add_flag("--json", json, "emit machine-readable JSON records");
    app.add_option("--digits", digits, "significant digits of decimal annotations")
        ->check(CLI::Range(1, 200));
    app.require_subcommand(1);

    auto* cmd_table1 = app.add_subcommand("table1", "reproduce the d-value table for N = 1..18");

    int env_from = 1, env_len = 7;
    std::string env_svg;
    auto* cmd_envelope = app.add_subcommand("envelope", "windowed distance envelope on [0, 1/2]");
    cmd_envelope->add_option("--from", env_from, "first Fibonacci index K")->check(CLI::PositiveNumber);
    cmd_envelope->add_option("--len", env_len, "window length N")->required()->check(CLI::PositiveNumber);
    cmd_envelope->add_option("--svg", env_svg, "write an SVG plot to this path");

    int dn_from = 1, dn_len = 1;
    auto* cmd_dn = app.add_subcommand("dn", "exact max-min value of a window");
    cmd_dn->add_option("--from", dn_from, "first Fibonacci index K")->check(CLI::PositiveNumber);
    cmd_dn->add_option("--len", dn_len, "window length N")->required()->check(CLI::PositiveNumber);

    int planar_n = 6;
    bool planar_creases = false;
    std::string planar_svg_path;
    auto* cmd_planar = app.add_subcommand("planar", "max-min over the unit square");
    cmd_planar->add_option("--n", planar_n, "number of sequence terms")
        ->required()
        ->check(CLI::Range(2, kPlanarMaxN));
    cmd_planar->add_flag("--creases", planar_creases, "list the crease lines in the report");
    cmd_planar->add_option("--svg", planar_svg_path, "write an SVG plot to this path");

    int a1_len = 40, a1_kmax = 100;
    std::string a1_eps = "1/20";
    auto* cmd_alpha1 = app.add_subcommand("alpha1", "distances of F_n/(phi+2) and window search");
    cmd_alpha1->add_option("--len", a1_len, "window length N")->required()->check(CLI::PositiveNumber);
    cmd_alpha1->add_option("--eps", a1_eps, "threshold margin as P/Q (default 1/20)");
    cmd_alpha1->add_option("--kmax", a1_kmax, "search bound for K")->check(CLI::PositiveNumber);

    std::string suite;
    std::optional<int> verify_max;
    int samples = 1000;
    unsigned long long seed = 20260808ULL;
    auto* cmd_verify = app.add_subcommand("verify", "run an exact verification suite");
    cmd_verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"identities", "lemma3", "lemma4", "props", "thm2", "thm3", "thm4",
                               "windows", "all"}));
    cmd_verify->add_option("--max", verify_max, "range bound (index or t, suite-specific)");
    cmd_verify->add_option("--samples", samples, "sample count for the windows suite")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", seed, "seed for the windows suite");

    auto* cmd_report = app.add_subcommand("report", "aggregate JSON report of the main results");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const FibCache cache(cache_size_from_env());

        if (*cmd_table1) {
            const ReportBundle b = report_table1(cache, digits);
            emit(b, json);
            return b.ok() ? kExitOk : kExitVerifyFail;
        }
        if (*cmd_envelope) {
            const ReportBundle b = report_envelope(cache, env_from, env_len, digits);
            if (!env_svg.empty())
                write_file(env_svg, envelope_svg(envelope_window(cache, {env_from, env_len})));
            emit(b, json);
            return kExitOk;
        }
        if (*cmd_dn) {
            emit(report_dn(cache, dn_from, dn_len, digits), json);
            return kExitOk;
        }
        if (*cmd_planar) {
            const ReportBundle b = report_planar(cache, planar_n, digits, planar_creases);
            if (!planar_svg_path.empty())
                write_file(planar_svg_path, planar_svg(cache, planar_n, t_value(cache, planar_n)));
            emit(b, json);
            return kExitOk;
        }
        if (*cmd_alpha1) {
            Rational eps;
            try {
                eps = Rational::parse(a1_eps);
            } catch (const std::invalid_argument&) {
                std::cerr << "--eps expects a rational like 1/20\n";
                return kExitUsage;
            }
            if (eps.sign() < 0) {
                std::cerr << "--eps must be >= 0\n";
                return kExitUsage;
            }
            emit(report_alpha1(cache, a1_len, eps, a1_kmax, digits), json);
            return kExitOk;
        }
        if (*cmd_verify) return run_verify(cache, suite, verify_max, samples, seed, json);
        if (*cmd_report) {
            std::string out = "[\n";
            out += report_table1(cache, digits).to_json();
            out += ",\n" + report_dn(cache, 1, 18, digits).to_json();
            for (int n = 2; n <= 8; ++n) out += ",\n" + report_planar(cache, n, digits).to_json();
            out += ",\n" + report_alpha1(cache, 40, Rational(1, 20), 100, digits).to_json();
            out += "]\n";
            std::cout << out;
            return kExitOk;
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::out_of_range& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}
