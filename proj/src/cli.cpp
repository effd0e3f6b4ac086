#include "rcp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcp/checks.hpp"
#include "rcp/cyclo.hpp"
#include "rcp/numsg.hpp"
#include "rcp/parallel.hpp"
#include "rcp/survey.hpp"
#include "rcp/ternary.hpp"

namespace rcp::cli {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

void print_poly(std::ostream& out, const IntPoly& f, bool dense) {
    const auto c = f.coeffs();
    if (dense) {
        for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
        out << '\n';
        return;
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) out << k << ':' << c[k] << '\n';
    }
}

std::string signed_str(Coeff v) { return (v > 0 ? "+" : "") + std::to_string(v); }

void print_values(std::ostream& out, const char* label, const std::vector<Coeff>& values) {
    out << label;
    for (Coeff v : values) out << ' ' << v;
    out << '\n';
}

void print_report(std::ostream& out, const CheckReport& rep) {
    out << (rep.passed() ? "PASS " : "FAIL ") << rep.name << " cap=" << rep.cap << " cases=" << rep.cases
        << " failures=" << rep.failures << '\n';
    for (const auto& n : rep.notes) out << "  note: " << n << '\n';
    for (const auto& c : rep.counterexamples) out << "  counterexample: " << c << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coefficients of cyclotomic and reciprocal cyclotomic polynomials", "rcp"};
    app.require_subcommand(1);

    u64 n = 0, n2 = 0, cap = 0, jobs = 1;
    i64 k = 0;
    bool dense = false, phi_flag = false, want_vn = false;
    std::string out_path, format = "csv", name;
    i64 mmax = 11;
    std::vector<u64> gens;
    u64 m = 0;
    std::optional<u64> verify_cap;

    auto* psi_cmd = app.add_subcommand("psi", "print Psi_n as k:coeff lines");
    psi_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    psi_cmd->add_flag("--dense", dense, "print the full coefficient vector");

    auto* phi_cmd = app.add_subcommand("phi", "print Phi_n as k:coeff lines");
    phi_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    phi_cmd->add_flag("--dense", dense, "print the full coefficient vector");

    auto* coeff_cmd = app.add_subcommand("coeff", "print c_n(k), or a_n(k) with --phi");
    coeff_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    coeff_cmd->add_option("k", k)->required();
    coeff_cmd->add_flag("--phi", phi_flag, "coefficient of Phi_n instead of Psi_n");

    auto* height_cmd = app.add_subcommand("height", "height, degree and first extremal index of Psi_n");
    height_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

    auto* vn_cmd = app.add_subcommand("vn", "coefficient value set of Psi_n and its gaps");
    vn_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

    auto* survey_cmd = app.add_subcommand("survey", "scan a range of n");
    survey_cmd->add_option("lo", n)->required()->check(CLI::PositiveNumber);
    survey_cmd->add_option("hi", n2)->required()->check(CLI::PositiveNumber);
    survey_cmd->add_option("--out", out_path, "output file (default stdout)");
    survey_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
    survey_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    survey_cmd->add_flag("--vn", want_vn, "include V_n in jsonl records");

    auto* table_cmd = app.add_subcommand("table1", "minimal n and k with |c_n(k)| = m");
    cap = 11305;
    table_cmd->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
    table_cmd->add_option("--cap", cap)->check(CLI::PositiveNumber);
    table_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run a named property suite, or 'all'");
    verify_cmd->add_option("name", name)->required();
    verify_cmd->add_option("--cap", verify_cap);
    verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius number of two coprime generators");
    frob_cmd->add_option("p", n)->required();
    frob_cmd->add_option("q", n2)->required();

    auto* den_cmd = app.add_subcommand("denumerant", "number of representations of m");
    den_cmd->add_option("m", m)->required();
    den_cmd->add_option("generators", gens)->required()->check(CLI::PositiveNumber);

    auto* inv_cmd = app.add_subcommand("invtaylor", "Taylor coefficients of 1/Phi_n");
    inv_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    inv_cmd->add_option("count", n2)->required();

    auto* chernick_cmd = app.add_subcommand("chernick", "c_C(24k+2) and h(Psi_C) for a Chernick Carmichael C");
    chernick_cmd->add_option("k", n)->required();

    auto* realize_cmd = app.add_subcommand("realize", "a triple p<q<r and k with c_pqr(k) = m");
    realize_cmd->add_option("m", k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "rcp: " << e.what() << '\n' << "run 'rcp --help' for usage\n";
        return kUsageError;
    }

    try {
        if (*psi_cmd) {
            print_poly(out, psi_poly(n), dense);
        } else if (*phi_cmd) {
            print_poly(out, phi_poly(n), dense);
        } else if (*coeff_cmd) {
            out << (phi_flag ? phi_poly(n) : psi_poly(n))[k] << '\n';
        } else if (*height_cmd) {
            const auto rec = survey_record(n, false);
            out << "height " << rec.height << '\n'
                << "degree " << rec.degree << '\n'
                << "first_extremal_k " << rec.first_extremal_k << '\n';
        } else if (*vn_cmd) {
            const auto rec = survey_record(n, true);
            print_values(out, "V:", *rec.vn);
            print_values(out, "gaps:", rec.gaps);
        } else if (*survey_cmd) {
            const auto fmt = format == "csv" ? ExportFormat::Csv : ExportFormat::Jsonl;
            const auto records = scan_range(n, n2, want_vn, static_cast<unsigned>(jobs));
            if (out_path.empty()) {
                write_records(out, records, fmt);
            } else {
                export_records(records, fmt, out_path);
            }
        } else if (*table_cmd) {
            MinimalTable table;
            int code = kOk;
            try {
                table = minimal_table(mmax, cap, static_cast<unsigned>(jobs));
            } catch (const IncompleteTable& e) {
                table = e.partial();
                err << "rcp: " << e.what() << '\n';
                code = kPropertyFailure;
            }
            out << "m n0 degree k0 value\n";
            for (const auto& r : table.rows) {
                out << r.m << ' ' << r.n0 << ' ' << r.degree << ' ' << r.k0 << ' ' << signed_str(r.value) << '\n';
            }
            return code;
        } else if (*verify_cmd) {
            std::vector<std::string> names;
            if (name == "all") {
                names = check_names();
            } else {
                names.push_back(name);
            }
            bool all_pass = true;
            for (const auto& nm : names) {
                const auto rep = run_check(nm, verify_cap, static_cast<unsigned>(jobs));
                print_report(out, rep);
                all_pass = all_pass && rep.passed();
            }
            return all_pass ? kOk : kPropertyFailure;
        } else if (*frob_cmd) {
            out << frobenius_two(n, n2) << '\n';
        } else if (*den_cmd) {
            out << denumerant(m, gens) << '\n';
        } else if (*inv_cmd) {
            const auto b = inverse_phi_taylor(n, n2);
            for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
            out << '\n';
        } else if (*chernick_cmd) {
            const auto res = chernick_check(n);
            out << "C " << res.carmichael << '\n'
                << "c(24k+2) " << res.coefficient << '\n'
                << "height " << res.height << '\n';
        } else if (*realize_cmd) {
            const auto r = realize_value(k);
            out << r.p << ' ' << r.q << ' ' << r.r << ' ' << r.k << '\n';
        }
    } catch (const std::invalid_argument& e) {
        err << "rcp: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "rcp: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "rcp: " << e.what() << '\n';
        return kPropertyFailure;
    }
    return kOk;
}

}  // namespace rcp::cli
