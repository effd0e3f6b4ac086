// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rcp/checks.hpp"
#include "rcp/cyclo.hpp"
#include "rcp/numsg.hpp"
#include "rcp/parallel.hpp"
#include "rcp/survey.hpp"
#include "rcp/ternary.hpp"

using namespace rcp;

namespace {

using u64 = std::uint64_t;

// Every tolerance used below.
constexpr long double kDensityLo = 0.60782L;
constexpr long double kDensityHi = 0.60803L;

const unsigned kJobs = default_jobs();

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Collector {
  public:
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            out_.ok = false;
            if (!out_.detail.empty()) out_.detail += "; ";
            out_.detail += what;
        }
    }
    void suite(const std::string& name, std::optional<u64> cap = std::nullopt) {
        const auto rep = run_check(name, cap, kJobs);
        std::ostringstream os;
        os << name << " failures=" << rep.failures;
        if (!rep.counterexamples.empty()) os << " first=" << rep.counterexamples.front();
        expect(rep.passed(), os.str());
    }
    Outcome result() const { return out_; }

  private:
    Outcome out_;
};

Outcome table1() {
    Collector c;
    const std::vector<TableRow> want{
        {1, 1, 0, 0, 1},          {2, 561, 241, 17, -2},     {3, 1155, 675, 33, -3},     {4, 2145, 1185, 44, 4},
        {5, 3795, 2035, 132, -5}, {6, 5005, 2125, 201, -6},  {7, 5005, 2125, 310, -7},   {8, 8645, 3461, 227, -8},
        {9, 8645, 3461, 240, 9},  {10, 11305, 4393, 240, -10}, {11, 11305, 4393, 306, 11}};
    const auto t = minimal_table(11, 11305, kJobs);
    c.expect(t.rows.size() == want.size(), "row count");
    for (std::size_t i = 0; i < std::min(t.rows.size(), want.size()); ++i) {
        const auto& r = t.rows[i];
        c.expect(r == want[i], "row m=" + std::to_string(want[i].m) + " got n0=" + std::to_string(r.n0) +
                                   " k0=" + std::to_string(r.k0) + " value=" + std::to_string(r.value));
    }
    return c.result();
}

Outcome extended_table() {
    Collector c;
    const auto t = minimal_table(21, 11305, kJobs);
    for (const auto& r : t.rows) {
        if (r.m >= 10) c.expect(r.n0 == 11305, "m=" + std::to_string(r.m) + " n0=" + std::to_string(r.n0));
    }
    c.expect(t.rows.size() == 21, "row count");
    return c.result();
}

Outcome smallest_non_flat() {
    Collector c;
    u64 n_psi = 0, n_phi = 0;
    for (u64 n = 1; n_psi == 0 || n_phi == 0; ++n) {
        if (n_psi == 0 && height(psi_poly(n)) > 1) n_psi = n;
        if (n_phi == 0 && height(phi_poly(n)) > 1) n_phi = n;
    }
    c.expect(n_psi == 561, "first non-flat Psi at " + std::to_string(n_psi));
    c.expect(n_phi == 105, "first non-flat Phi at " + std::to_string(n_phi));
    const IntPoly psi = psi_poly(561);
    c.expect(psi[17] == -2 && first_extremal_index(psi) == 17, "c_561(17)");
    const IntPoly phi = phi_poly(105);
    c.expect(phi[7] == -2 && first_extremal_index(phi) == 7, "a_105(7)");
    return c.result();
}

Outcome beiter() {
    Collector c;
    c.suite("beiter-analogue", 200'000);
    return c.result();
}

Outcome drie() {
    Collector c;
    c.suite("drie", 200'000);
    return c.result();
}

Outcome value_set_gaps() {
    Collector c;
    struct Want {
        u64 n;
        Coeff h;
        std::vector<Coeff> gaps;
    };
    const std::vector<Want> wants{{23205, 13, {12}}, {46410, 13, {12}}, {49335, 34, {33}}, {50505, 15, {14}}};
    const auto got = parallel_map(wants.size(), kJobs, [&](std::size_t i) { return survey_record(wants[i].n, true); });
    for (std::size_t i = 0; i < wants.size(); ++i) {
        c.expect(got[i].height == wants[i].h, "height of " + std::to_string(wants[i].n));
        c.expect(got[i].gaps == wants[i].gaps, "gaps of " + std::to_string(wants[i].n));
        c.expect(vn_gaps(wants[i].n) == wants[i].gaps, "vn_gaps of " + std::to_string(wants[i].n));
    }
    return c.result();
}

Outcome chernick() {
    Collector c;
    for (u64 k : {1, 6, 35}) {
        const auto res = chernick_check(k);
        c.expect(res.carmichael == (6 * k + 1) * (12 * k + 1) * (18 * k + 1), "C for k=" + std::to_string(k));
        c.expect(res.coefficient == -2, "coefficient for k=" + std::to_string(k));
        c.expect(res.height == 2, "height for k=" + std::to_string(k));
    }
    c.expect(chernick_check(35).carmichael == 56'052'361, "C for k=35");
    return c.result();
}

Outcome height_product_remark() {
    Collector c;
    const u64 n = 3 * 11 * 17 * 331;
    c.expect(height(psi_poly(n)) == 4, "dense height");
    c.expect(height(phi_poly(561)) == 2 && height(psi_poly(561)) == 2, "factor heights");
    c.expect(height_product(561, 331) == 4, "height_product");
    return c.result();
}

Outcome carmichael_2821() {
    Collector c;
    c.expect(is_flat(psi_poly(2821)), "Psi_2821 not flat");
    return c.result();
}

Outcome oracle_suite() {
    Collector c;
    c.suite("product-identity", 5000);
    c.suite("verbinding", 100'000);
    c.suite("denumerant", 100'000);
    c.suite("apq", 10'000);
    // independent schoolbook recursion for the lower range
    const auto bad = parallel_map(1000, 1, [](std::size_t i) {
        const u64 n = i + 1;
        const auto phi = oracle::cyclotomic(n);
        const auto psi = oracle::reciprocal_cyclotomic(n);
        const IntPoly a = phi_poly(n), b = psi_poly(n);
        const bool differ = std::vector<Coeff>(a.coeffs().begin(), a.coeffs().end()) != std::vector<Coeff>(phi.begin(), phi.end()) ||
                            std::vector<Coeff>(b.coeffs().begin(), b.coeffs().end()) != std::vector<Coeff>(psi.begin(), psi.end());
        return differ ? 1 : 0;
    });
    std::size_t mismatches = 0;
    for (int b : bad) mismatches += static_cast<std::size_t>(b);
    c.expect(mismatches == 0, "brute-force oracle mismatches=" + std::to_string(mismatches));
    return c.result();
}

Outcome identities() {
    Collector c;
    c.suite("blup", 5000);
    c.suite("order2-flat", 10'000);
    c.suite("invtaylor", 2000);
    return c.result();
}

Outcome semigroups() {
    Collector c;
    c.suite("frobenius", 2000);
    return c.result();
}

Outcome density() {
    Collector c;
    const long double d = density_check(1'000'000);
    char buf[64];
    std::snprintf(buf, sizeof buf, "density=%.8Lf", d);
    c.expect(d >= kDensityLo && d <= kDensityHi, buf);
    return c.result();
}

Outcome degree() {
    Collector c;
    const auto got = degree_comparison(100'000);
    c.expect(got == std::vector<u64>{105, 165, 195}, "exceptional set size " + std::to_string(got.size()));
    return c.result();
}

Outcome realize() {
    Collector c;
    for (std::int64_t m = -8; m <= 8; ++m) {
        if (m == 0) continue;
        const auto rv = realize_value(m);
        c.expect(psi_poly(rv.p * rv.q * rv.r)[rv.k] == m, "realize " + std::to_string(m));
    }
    return c.result();
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"01 minimal table m<=11", table1},
        {"02 n0=11305 for m=10..21", extended_table},
        {"03 smallest non-flat Psi and Phi", smallest_non_flat},
        {"04 maximal-height classification pqr<=2e5", beiter},
        {"05 p=3 value sets pqr<=2e5", drie},
        {"06 value-set gaps", value_set_gaps},
        {"07 Chernick Carmichael k=1,6,35", chernick},
        {"08 height product 3*11*17*331", height_product_remark},
        {"09 Psi_2821 flat", carmichael_2821},
        {"10 oracle equivalence", oracle_suite},
        {"11 identities and inverse Taylor periods", identities},
        {"12 two-generator semigroups pq<=2000", semigroups},
        {"13 totient density at 1e6", density},
        {"14 degree comparison pqr<=1e5", degree},
        {"-- realize_value |m|<=8", realize},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %-45s %7.1fs%s%s\n", o.ok ? "PASS" : "FAIL", cr.name, secs, o.ok ? "" : "  ",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok) ++failed;
    }
    std::printf("%d of %zu failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
