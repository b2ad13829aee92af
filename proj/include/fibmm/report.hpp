#pragma once

#include <string>
#include <vector>

#include "fibmm/minmax.hpp"
#include "fibmm/planar.hpp"

namespace fibmm {

inline constexpr const char* kVersion = "fibmm 1.0.0";

/// One named result: the exact string is authoritative and round-trips
/// through the parsers; the decimal is an annotation.
struct ReportField {
    std::string name;
    std::string exact;
    std::string decimal;
    std::string note;
};

/// Machine-consumable result of one CLI command: command echo, engine
/// version, exact fields with decimal annotations, and verdicts. Every
/// verdict is computed from exact values.
struct ReportBundle {
    std::string command;
    std::string version = kVersion;
    std::vector<ReportField> fields;
    std::vector<Check> checks;

    bool ok() const;
    void add(std::string name, const Rational& v, int digits, std::string note = "");
    void add(std::string name, const Surd& v, int digits, std::string note = "");
    void add_raw(std::string name, std::string exact, std::string note = "");

    std::string to_text() const;
    std::string to_json() const;  // single deterministic JSON object
};

ReportBundle report_table1(const FibCache& cache, int digits);
ReportBundle report_envelope(const FibCache& cache, int K, int N, int digits);
ReportBundle report_dn(const FibCache& cache, int K, int N, int digits);
ReportBundle report_planar(const FibCache& cache, int N, int digits,
                           bool with_creases = false);
ReportBundle report_alpha1(const FibCache& cache, int N, const Rational& eps, int k_max,
                           int digits);

}  // namespace fibmm
