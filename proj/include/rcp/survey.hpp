#pragma once

// Range scans over n, extremal tables, and their CSV / JSON-lines export.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcp/cyclo.hpp"

namespace rcp {

struct SurveyRecord {
    std::uint64_t n = 1;
    std::string factor_string;
    std::uint64_t degree = 0;  // n - phi(n)
    Coeff height = 0;
    std::uint64_t first_extremal_k = 0;
    std::optional<std::vector<Coeff>> vn;
    std::vector<Coeff> gaps;  // 0 < v < height with v not in |V_n|

    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

/// One record; Psi is built at rad(n) and indices scaled by n/rad(n).
SurveyRecord survey_record(std::uint64_t n, bool want_vn, const Budget& budget = {});

/// Records for n_lo..n_hi in ascending n. Output is identical for every `jobs`.
std::vector<SurveyRecord> scan_range(std::uint64_t n_lo, std::uint64_t n_hi, bool want_vn, unsigned jobs = 1,
                                     const Budget& budget = {});

struct TableRow {
    Coeff m = 0;
    std::uint64_t n0 = 0;
    std::uint64_t degree = 0;
    std::uint64_t k0 = 0;
    Coeff value = 0;  // c_{n0}(k0), |value| == m

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct MinimalTable {
    std::vector<TableRow> rows;  // ascending in m
};

/// Raised when some m <= m_max has no n <= n_cap with m in |V_n|.
class IncompleteTable : public std::runtime_error {
  public:
    IncompleteTable(std::vector<Coeff> missing, MinimalTable partial);
    const std::vector<Coeff>& missing() const { return missing_; }
    const MinimalTable& partial() const { return partial_; }

  private:
    std::vector<Coeff> missing_;
    MinimalTable partial_;
};

/// For each 1 <= m <= m_max: the least n with m in |V_n|, deg Psi_n, the least
/// k with |c_n(k)| = m, and c_n(k).
MinimalTable minimal_table(Coeff m_max, std::uint64_t n_cap, unsigned jobs = 1);

/// Positive v below h(Psi_n) with neither v nor -v in V_n.
std::vector<Coeff> vn_gaps(std::uint64_t n, const Budget& budget = {});

/// (1/x) sum_{n <= x} phi(n)/n; tends to 6/pi^2.
long double density_check(std::uint64_t x);

/// pqr <= cap (odd primes p < q < r) with deg Psi_pqr >= deg Phi_pqr, ascending.
std::vector<std::uint64_t> degree_comparison(std::uint64_t cap);

/// Primes q in [q_lo, q_hi] for which (q, 2q-7] lacks a prime = 1 (mod 3) or
/// a prime = 2 (mod 3).
std::vector<std::uint64_t> molsen_check(std::uint64_t q_lo, std::uint64_t q_hi);

enum class ExportFormat { Csv, Jsonl };

inline constexpr const char* kCsvHeader = "n,factorization,degree,height,first_extremal_k,gaps";

void write_records(std::ostream& os, std::span<const SurveyRecord> records, ExportFormat format);
/// Throws std::runtime_error on I/O failure.
void export_records(std::span<const SurveyRecord> records, ExportFormat format, const std::filesystem::path& path);

std::string to_jsonl(const SurveyRecord& record);
SurveyRecord from_jsonl(const std::string& line);
std::vector<SurveyRecord> read_jsonl(std::istream& is);

}  // namespace rcp
