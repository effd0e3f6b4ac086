#include "rcp/survey.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rcp/arith.hpp"
#include "rcp/parallel.hpp"
#include "rcp/ternary.hpp"

namespace rcp {

namespace {

using u64 = std::uint64_t;

std::vector<Coeff> gaps_of(const CoeffSet& vn, Coeff h) {
    std::vector<Coeff> gaps;
    for (Coeff v = 1; v < h; ++v) {
        if (!vn.contains(v) && !vn.contains(-v)) gaps.push_back(v);
    }
    return gaps;
}

}  // namespace

SurveyRecord survey_record(u64 n, bool want_vn, const Budget& budget) {
    const auto f = factorize(n);
    const u64 rad = radical(f);
    const IntPoly psi = psi_poly(rad, budget);
    SurveyRecord rec;
    rec.n = n;
    rec.factor_string = factor_string(f);
    rec.degree = n - euler_phi(f);
    rec.height = height(psi);
    rec.first_extremal_k = static_cast<u64>(first_extremal_index(psi)) * (n / rad);
    CoeffSet vn = coefficient_set_of(rad, psi);
    // inflation by n/rad > 1 introduces zero coefficients
    if (n != rad && !vn.contains(0)) vn.values.insert(std::lower_bound(vn.values.begin(), vn.values.end(), 0), 0);
    rec.gaps = gaps_of(vn, rec.height);
    if (want_vn) rec.vn = std::move(vn.values);
    return rec;
}

std::vector<SurveyRecord> scan_range(u64 n_lo, u64 n_hi, bool want_vn, unsigned jobs, const Budget& budget) {
    if (n_lo < 1 || n_lo > n_hi) throw std::domain_error("scan_range: need 1 <= lo <= hi");
    if (n_hi > budget.max_degree) throw BudgetExceeded("scan_range: upper end exceeds budget");
    return parallel_map(static_cast<std::size_t>(n_hi - n_lo + 1), jobs,
                        [&](std::size_t i) { return survey_record(n_lo + i, want_vn, budget); });
}

IncompleteTable::IncompleteTable(std::vector<Coeff> missing, MinimalTable partial)
    : std::runtime_error([&] {
          std::string s = "minimal_table: no n below the cap realizes m =";
          for (Coeff m : missing) s += " " + std::to_string(m);
          return s;
      }()),
      missing_(std::move(missing)),
      partial_(std::move(partial)) {}

MinimalTable minimal_table(Coeff m_max, u64 n_cap, unsigned jobs) {
    if (m_max < 1) throw std::domain_error("minimal_table: m_max must be >= 1");
    if (n_cap < 1) throw std::domain_error("minimal_table: n_cap must be >= 1");
    struct Hit {
        Coeff m;
        u64 k;
        Coeff value;
    };
    // per n: first index carrying each |value| in 1..m_max
    const auto hits = parallel_map(static_cast<std::size_t>(n_cap), jobs, [&](std::size_t i) {
        const u64 n = i + 1;
        const auto f = factorize(n);
        const u64 rad = radical(f);
        const IntPoly psi = psi_poly(rad);
        std::vector<Hit> found;
        std::vector<bool> seen(static_cast<std::size_t>(m_max) + 1, false);
        const auto c = psi.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Coeff a = checked::abs(c[k]);
            if (a == 0 || a > m_max || seen[static_cast<std::size_t>(a)]) continue;
            seen[static_cast<std::size_t>(a)] = true;
            found.push_back({a, k * (n / rad), c[k]});
        }
        return found;
    });

    std::map<Coeff, TableRow> rows;
    for (std::size_t i = 0; i < hits.size() && static_cast<Coeff>(rows.size()) < m_max; ++i) {
        const u64 n = i + 1;
        for (const auto& h : hits[i]) {
            if (rows.contains(h.m)) continue;
            rows[h.m] = {h.m, n, n - euler_phi(factorize(n)), h.k, h.value};
        }
    }
    MinimalTable table;
    std::vector<Coeff> missing;
    for (Coeff m = 1; m <= m_max; ++m) {
        if (auto it = rows.find(m); it != rows.end()) {
            table.rows.push_back(it->second);
        } else {
            missing.push_back(m);
        }
    }
    if (!missing.empty()) throw IncompleteTable(std::move(missing), std::move(table));
    return table;
}

std::vector<Coeff> vn_gaps(u64 n, const Budget& budget) {
    const IntPoly psi = psi_poly(n, budget);
    return gaps_of(coefficient_set_of(n, psi), height(psi));
}

long double density_check(u64 x) {
    if (x < 1) throw std::domain_error("density_check: x must be positive");
    const auto phi = totients_up_to(x);
    long double sum = 0, comp = 0;  // Kahan
    for (u64 n = 1; n <= x; ++n) {
        const long double term = static_cast<long double>(phi[n]) / static_cast<long double>(n) - comp;
        const long double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
    }
    return sum / static_cast<long double>(x);
}

std::vector<u64> degree_comparison(u64 cap) {
    std::vector<u64> out;
    for (const auto& t : odd_prime_triples(cap)) {
        const u64 n = t.n();
        const u64 phi = (t.p - 1) * (t.q - 1) * (t.r - 1);
        if (n - phi >= phi) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> molsen_check(u64 q_lo, u64 q_hi) {
    std::vector<u64> failing;
    if (q_hi < q_lo) return failing;
    const auto primes = primes_up_to(2 * q_hi);
    for (auto it = std::lower_bound(primes.begin(), primes.end(), q_lo); it != primes.end() && *it <= q_hi; ++it) {
        const u64 q = *it;
        bool one = false, two = false;
        for (auto jt = it + 1; jt != primes.end() && *jt + 7 <= 2 * q && !(one && two); ++jt) {
            (*jt % 3 == 1 ? one : two) = true;
        }
        if (!(one && two)) failing.push_back(q);
    }
    return failing;
}

namespace {

std::string join_gaps(const std::vector<Coeff>& gaps) {
    std::string s;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(gaps[i]);
    }
    return s;
}

nlohmann::ordered_json to_json(const SurveyRecord& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["factor_string"] = r.factor_string;
    j["degree"] = r.degree;
    j["height"] = r.height;
    j["first_extremal_k"] = r.first_extremal_k;
    j["vn"] = r.vn ? nlohmann::ordered_json(*r.vn) : nlohmann::ordered_json(nullptr);
    j["gaps"] = r.gaps;
    return j;
}

}  // namespace

std::string to_jsonl(const SurveyRecord& record) { return to_json(record).dump(); }

SurveyRecord from_jsonl(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    SurveyRecord r;
    r.n = j.at("n").get<u64>();
    r.factor_string = j.at("factor_string").get<std::string>();
    r.degree = j.at("degree").get<u64>();
    r.height = j.at("height").get<Coeff>();
    r.first_extremal_k = j.at("first_extremal_k").get<u64>();
    if (j.contains("vn") && !j.at("vn").is_null()) r.vn = j.at("vn").get<std::vector<Coeff>>();
    r.gaps = j.at("gaps").get<std::vector<Coeff>>();
    return r;
}

std::vector<SurveyRecord> read_jsonl(std::istream& is) {
    std::vector<SurveyRecord> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty()) out.push_back(from_jsonl(line));
    }
    return out;
}

void write_records(std::ostream& os, std::span<const SurveyRecord> records, ExportFormat format) {
    if (format == ExportFormat::Csv) {
        os << kCsvHeader << '\n';
        for (const auto& r : records) {
            os << r.n << ',' << r.factor_string << ',' << r.degree << ',' << r.height << ',' << r.first_extremal_k
               << ',' << join_gaps(r.gaps) << '\n';
        }
    } else {
        for (const auto& r : records) os << to_jsonl(r) << '\n';
    }
}

void export_records(std::span<const SurveyRecord> records, ExportFormat format, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("export: cannot open " + path.string());
    write_records(out, records, format);
    out.flush();
    if (!out) throw std::runtime_error("export: write failed for " + path.string());
}

}  // namespace rcp
