#include "fibmm/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "fibmm/textio.hpp"

namespace fibmm {

namespace {

struct Table1Row {
    int n_from;
    int n_to;
    const char* x;
    const char* d;
};

// Golden values; the command recomputes everything and compares.
constexpr Table1Row kTable1[] = {
    {1, 2, "1/2", "1/2"},       {3, 3, "1/3", "1/3"},     {4, 5, "1/4", "1/4"},
    {6, 9, "3/11", "2/11"},     {10, 13, "8/29", "5/29"}, {14, 17, "21/76", "13/76"},
    {18, 18, "55/199", "34/199"},
};

}  // namespace

bool ReportBundle::ok() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

void ReportBundle::add(std::string name, const Rational& v, int digits, std::string note) {
    fields.push_back(ReportField{std::move(name), v.str(), decimal_str(v, digits), std::move(note)});
}

void ReportBundle::add(std::string name, const Surd& v, int digits, std::string note) {
    fields.push_back(ReportField{std::move(name), v.str(), decimal_str(v, digits), std::move(note)});
}

void ReportBundle::add_raw(std::string name, std::string exact, std::string note) {
    fields.push_back(ReportField{std::move(name), std::move(exact), "", std::move(note)});
}

std::string ReportBundle::to_text() const {
    std::ostringstream out;
    out << version << " | " << command << "\n";
    for (const ReportField& f : fields) {
        out << f.name << " = " << f.exact;
        if (!f.decimal.empty()) out << "  ~ " << f.decimal;
        if (!f.note.empty()) out << "  [" << f.note << "]";
        out << "\n";
    }
    for (const Check& c : checks) {
        out << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << " - " << c.detail;
        out << "\n";
    }
    if (!checks.empty()) out << "verdict: " << (ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string ReportBundle::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["version"] = version;
    j["fields"] = nlohmann::ordered_json::array();
    for (const ReportField& f : fields) {
        nlohmann::ordered_json jf;
        jf["name"] = f.name;
        jf["exact"] = f.exact;
        if (!f.decimal.empty()) jf["decimal"] = f.decimal;
        if (!f.note.empty()) jf["note"] = f.note;
        j["fields"].push_back(jf);
    }
    if (!checks.empty()) {
        j["checks"] = nlohmann::ordered_json::array();
        for (const Check& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            j["checks"].push_back(jc);
        }
        j["ok"] = ok();
    }
    return j.dump(2) + "\n";
}

ReportBundle report_table1(const FibCache& cache, int digits) {
    ReportBundle b;
    b.command = "table1";
    for (const Table1Row& row : kTable1) {
        const Rational gold_x = Rational::parse(row.x);
        const Rational gold_d = Rational::parse(row.d);
        bool row_ok = true;
        for (int N = row.n_from; N <= row.n_to; ++N) {
            const MinMaxResult r = d_value(cache, {1, N});
            row_ok = row_ok && r.value == gold_d && r.argmax.size() == 1 && r.argmax[0] == gold_x;
        }
        const std::string label = row.n_from == row.n_to
                                      ? std::to_string(row.n_from)
                                      : std::to_string(row.n_from) + ".." + std::to_string(row.n_to);
        std::string note;
        if (row.n_from >= 6) {
            // Fibonacci-ratio factorization x = F_{2n+2}/(F_{2n+2}+F_{2n+4}),
            // d = F_{2n+1}/(F_{2n+2}+F_{2n+4}) with n = floor((N-2)/4).
            const int n = (row.n_from - 2) / 4;
            const mpz_class den = cache.fib(2 * n + 2) + cache.fib(2 * n + 4);
            row_ok = row_ok && gold_x == Rational(cache.fib(2 * n + 2), den) &&
                     gold_d == Rational(cache.fib(2 * n + 1), den);
            note = "x = F_" + std::to_string(2 * n + 2) + "/(F_" + std::to_string(2 * n + 2) +
                   "+F_" + std::to_string(2 * n + 4) + "), d = F_" + std::to_string(2 * n + 1) +
                   "/(F_" + std::to_string(2 * n + 2) + "+F_" + std::to_string(2 * n + 4) + ")";
        }
        b.add("x[" + label + "]", gold_x, digits, note);
        b.add("d[" + label + "]", gold_d, digits);
        b.checks.push_back(Check{"row N = " + label, row_ok, ""});
    }
    return b;
}

ReportBundle report_envelope(const FibCache& cache, int K, int N, int digits) {
    ReportBundle b;
    b.command = "envelope --from " + std::to_string(K) + " --len " + std::to_string(N);
    const Pwl env = envelope_window(cache, {K, N});
    b.add_raw("pieces", std::to_string(env.piece_count()));
    const Pwl::Extremum ext = env.global_max();
    b.add("max", ext.value, digits);
    for (size_t i = 0; i < ext.argmax.size(); ++i)
        b.add("argmax[" + std::to_string(i) + "]", ext.argmax[i], digits);
    b.add_raw("record", env.serialize());
    return b;
}

ReportBundle report_dn(const FibCache& cache, int K, int N, int digits) {
    ReportBundle b;
    b.command = "dn --from " + std::to_string(K) + " --len " + std::to_string(N);
    const MinMaxResult r = d_value(cache, {K, N});
    b.add("d", r.value, digits);
    for (size_t i = 0; i < r.argmax.size(); ++i) {
        b.add("argmax[" + std::to_string(i) + "]", r.argmax[i], digits);
        std::string profile;
        for (const WindowDistance& wd : r.profiles[i]) {
            if (!profile.empty()) profile += " ";
            profile += "k=" + std::to_string(wd.k) + ":" + wd.dist.str();
        }
        b.add_raw("profile[" + std::to_string(i) + "]", profile);
    }
    return b;
}

ReportBundle report_planar(const FibCache& cache, int N, int digits, bool with_creases) {
    ReportBundle b;
    b.command = "planar --n " + std::to_string(N);
    const PlanarResult r = t_value(cache, N);
    b.add("t", r.t, digits);
    if (with_creases) {
        for (const CreaseLine& l : crease_lines(cache, N)) {
            const LinearForm f = form_for(cache, l.form_index);
            b.add_raw("crease[G_" + std::to_string(l.form_index) + "]",
                      std::to_string(f.a) + "x + " + std::to_string(f.b) + "y = " + l.level.str(),
                      l.level.is_integer() ? "zero line" : "peak line");
        }
    }
    for (size_t i = 0; i < r.maximizers.size(); ++i) {
        b.add("x[" + std::to_string(i) + "]", r.maximizers[i].x, digits);
        b.add("y[" + std::to_string(i) + "]", r.maximizers[i].y, digits);
        std::string profile;
        for (size_t n = 0; n < r.profiles[i].size(); ++n) {
            if (!profile.empty()) profile += " ";
            profile += "n=" + std::to_string(n + 1) + ":" + r.profiles[i][n].str();
        }
        b.add_raw("profile[" + std::to_string(i) + "]", profile);
    }
    return b;
}

ReportBundle report_alpha1(const FibCache& cache, int N, const Rational& eps, int k_max,
                           int digits) {
    ReportBundle b;
    b.command = "alpha1 --len " + std::to_string(N) + " --eps " + eps.str() + " --kmax " +
                std::to_string(k_max);
    b.add("alpha1", alpha1(), digits);
    b.add("min ||F_n alpha1|| over n <= " + std::to_string(N), theorem2_min(cache, N), digits);
    const auto K = theorem3_search(cache, N, eps, k_max);
    if (K) {
        b.add_raw("window start K", std::to_string(*K),
                  "min over k = K..K+N of ||F_k alpha1|| exceeds 1/5 - eps");
        for (const auto& [k, d] : alpha1_window_profile(cache, *K, N))
            b.add("||F_" + std::to_string(k) + " alpha1||", d, digits);
    } else {
        b.add_raw("window start K", "not found",
                  "every window of length >= 4 contains an index k = 0 mod 4 whose distance "
                  "falls strictly below 1/5, so eps = 0 can never be cleared");
    }
    // Nearest-integer decompositions T_n - F_n alpha1 = main + r for the
    // leading indices.
    for (int n = 4; n <= std::min(N, 12); ++n) {
        const ResidualReport rep = residual(cache, n);
        b.add("residual r(" + std::to_string(n) + ")", rep.r, digits,
              "T_" + std::to_string(n) + " = " + nearest_T(cache, n).get_str() + ", main term " +
                  rep.main_term.str());
    }
    return b;
}

}  // namespace fibmm
