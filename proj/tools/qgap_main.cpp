#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgap/gfs.hpp"
#include "qgap/verify.hpp"

namespace {

using qgap::Family;
using qgap::Int;
using qgap::QSeries;

/* Writes to stdout, or atomically to a file (temp-then-rename, so a
 * failed run leaves no partial file behind). */
int emit(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp(path + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            std::cerr << "qgap: cannot open " << tmp << " for writing\n";
            return 2;
        }
        out << content;
        if (!out) {
            out.close();
            fs::remove(tmp);
            std::cerr << "qgap: write to " << tmp << " failed\n";
            return 2;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        std::cerr << "qgap: rename to " << target << " failed: " << ec.message() << "\n";
        return 2;
    }
    return 0;
}

struct TableRow {
    int n;
    int m;
    Int count;
};

std::string render_table(const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::string out = "n,m,count\n";
        for (const auto& r : rows) {
            out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + r.count.get_str() + "\n";
        }
        return out;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        j.push_back({{"n", r.n}, {"m", r.m}, {"count", r.count.get_str()}});
    }
    return j.dump(2) + "\n";
}

std::string render_series(const QSeries& s, const std::string& format) {
    if (format == "bfile") {
        std::string out;
        for (int n = 0; n <= s.order(); ++n) {
            out += std::to_string(n) + " " + s[n].get_str() + "\n";
        }
        return out;
    }
    if (format == "csv") {
        std::string out = "n,a\n";
        for (int n = 0; n <= s.order(); ++n) {
            out += std::to_string(n) + "," + s[n].get_str() + "\n";
        }
        return out;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int n = 0; n <= s.order(); ++n) {
        j.push_back({{"n", n}, {"a", s[n].get_str()}});
    }
    return j.dump(2) + "\n";
}

int run_table(Family family, int j, int n_max, const std::string& format,
              const std::string& output) {
    const qgap::WQPoly table = qgap::gf_missing_table({family, j, n_max});
    std::vector<TableRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        const int m_hi = n == 0 ? 0 : n - 1;
        for (int m = 0; m <= m_hi; ++m) {
            const Int& c = table.coeff(m, n);
            if (c != 0) rows.push_back({n, m, c});
        }
    }
    return emit(render_table(rows, format), output);
}

int run_series(const std::string& name, Family family, int k, int n_max,
               const std::string& format, const std::string& output) {
    QSeries s(0);
    if (name == "parity-diff") {
        s = qgap::gf_parity_diff(family, n_max);
    } else if (name == "gapfree") {
        s = qgap::gf_gapfree(family, n_max);
    } else if (name == "one-missing") {
        s = qgap::gf_one_missing(family, n_max);
    } else if (name == "nu-d-lt-k") {
        if (family != Family::partitions) {
            std::cerr << "qgap: series nu-d-lt-k is defined for --family partitions\n";
            return 2;
        }
        s = qgap::gf_nu_d_lt_k(k, n_max);
    } else {
        std::cerr << "qgap: unknown series name: " << name << "\n";
        return 2;
    }
    return emit(render_series(s, format), output);
}

int run_oeis(const std::string& id, int n_max, const std::string& output) {
    QSeries s(0);
    if (id == "A090858") {
        s = qgap::gf_one_missing(Family::partitions, n_max);
    } else if (id == "A268498") {
        s = qgap::gf_parity_diff(Family::partitions, n_max);
    } else if (id == "A268499") {
        s = qgap::gf_parity_diff(Family::overpartitions, n_max);
    } else {
        std::cerr << "qgap: unknown sequence id: " << id << "\n";
        return 2;
    }
    return emit(render_series(s, "bfile"), output);
}

int finish_report(const qgap::VerdictReport& report, const std::string& output) {
    std::cerr << "qgap: " << report.check_name << (report.passed ? " passed" : " FAILED")
              << " (" << report.failures.size() << " failures, " << report.witnesses.size()
              << " witnesses, " << report.elapsed_ms << " ms)\n";
    const int rc = emit(report.to_json() + "\n", output);
    if (rc != 0) return rc;
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact missing-integer statistics for partitions and overpartitions"};
    app.require_subcommand(1);

    std::string family_name = "partitions";
    std::string format = "csv";
    std::string output;
    std::string series_name;
    std::string check_name;
    std::string oeis_id;
    int j = 1;
    int k = 1;
    int k_max = 5;
    int n_max = -1;
    int threads = 1;

    const auto family_check = CLI::IsMember({"partitions", "overpartitions"});

    auto* table = app.add_subcommand("table", "bivariate (n, m) missing-integer counts");
    table->add_option("--family", family_name)->check(family_check);
    table->add_option("--j", j, "track missing integers >= j")->check(CLI::Range(1, 1 << 20));
    table->add_option("--nmax", n_max, "largest n")->required()->check(CLI::Range(0, 1 << 20));
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--output", output, "write atomically to this path instead of stdout");

    auto* series = app.add_subcommand("series", "coefficient sequences a(0..nmax)");
    series->add_option("--name", series_name)
        ->required()
        ->check(CLI::IsMember({"parity-diff", "gapfree", "one-missing", "nu-d-lt-k"}));
    series->add_option("--family", family_name)->check(family_check);
    series->add_option("--k", k, "multiplicity bound for nu-d-lt-k")->check(CLI::Range(1, 1 << 20));
    series->add_option("--nmax", n_max)->required()->check(CLI::Range(0, 1 << 20));
    series->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "bfile"}));
    series->add_option("--output", output);

    auto* verify = app.add_subcommand("verify", "theorem and oracle checks (exit 0 iff passed)");
    verify->add_option("check", check_name)
        ->required()
        ->check(CLI::IsMember({"mod3", "mod4", "crosscheck-table", "crosscheck-one-double",
                               "crosscheck-nu", "preliminaries"}));
    verify->add_option("--family", family_name)->check(family_check);
    verify->add_option("--j", j)->check(CLI::Range(1, 1 << 20));
    verify->add_option("--kmax", k_max)->check(CLI::Range(1, 1 << 20));
    verify->add_option("--nmax", n_max, "range end (defaults per check)")
        ->check(CLI::Range(0, 1 << 20));
    verify->add_option("--threads", threads)->check(CLI::Range(1, 256));
    verify->add_option("--output", output);

    auto* scan = app.add_subcommand("scan", "conjecture scans (exit 0 iff no counterexample above threshold)");
    scan->add_option("check", check_name)
        ->required()
        ->check(CLI::IsMember({"bias", "bound-vs-distinct"}));
    scan->add_option("--family", family_name)->check(family_check);
    scan->add_option("--nmax", n_max)->check(CLI::Range(1, 1 << 20));
    scan->add_option("--output", output);

    auto* oeis = app.add_subcommand("oeis", "b-file export of the linked OEIS sequences");
    oeis->add_option("--id", oeis_id)
        ->required()
        ->check(CLI::IsMember({"A090858", "A268498", "A268499"}));
    oeis->add_option("--nmax", n_max)->required()->check(CLI::Range(0, 1 << 20));
    oeis->add_option("--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const Family family = qgap::family_from_name(family_name);
        if (table->parsed()) {
            return run_table(family, j, n_max, format, output);
        }
        if (series->parsed()) {
            return run_series(series_name, family, k, n_max, format, output);
        }
        if (oeis->parsed()) {
            return run_oeis(oeis_id, n_max, output);
        }
        if (verify->parsed()) {
            qgap::VerdictReport report;
            if (check_name == "mod3") {
                if (n_max < 0) n_max = 1000;
                std::cerr << "qgap: checking mod-3 congruence for 1 <= n <= " << n_max << "\n";
                report = qgap::check_congruence_mod3(n_max);
            } else if (check_name == "mod4") {
                if (n_max < 0) n_max = 1000;
                std::cerr << "qgap: checking mod-4 congruence for 1 <= n <= " << n_max << "\n";
                report = qgap::check_congruence_mod4(n_max);
            } else if (check_name == "crosscheck-table") {
                if (n_max < 0) n_max = family == Family::partitions ? 28 : 18;
                std::cerr << "qgap: crosschecking j=" << j << " table against enumeration to n="
                          << n_max << "\n";
                report = qgap::crosscheck_missing_tables(family, j, n_max, threads);
            } else if (check_name == "crosscheck-one-double") {
                if (n_max < 0) n_max = family == Family::partitions ? 28 : 18;
                report = qgap::crosscheck_one_double(family, n_max);
            } else if (check_name == "crosscheck-nu") {
                if (n_max < 0) n_max = 25;
                report = qgap::crosscheck_nu_identity(k_max, n_max, threads);
            } else {
                if (n_max < 0) n_max = 300;
                report = qgap::check_preliminaries(n_max);
            }
            return finish_report(report, output);
        }
        // scan
        qgap::VerdictReport report;
        if (n_max < 0) n_max = 1000;
        if (check_name == "bias") {
            std::cerr << "qgap: scanning parity bias (" << family_name << ") to n=" << n_max
                      << "\n";
            report = qgap::scan_bias(family, n_max);
        } else {
            std::cerr << "qgap: scanning M_e-M_o < q(n) to n=" << n_max << "\n";
            report = qgap::scan_bound_vs_distinct(n_max);
        }
        return finish_report(report, output);
    } catch (const std::exception& e) {
        std::cerr << "qgap: " << e.what() << "\n";
        return 2;
    }
}
