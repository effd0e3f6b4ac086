#pragma once

// Two-generator numerical semigroups: denumerants, the Frobenius number and
// the denumerant form of ternary Psi coefficients.

#include <cstdint>
#include <span>
#include <vector>

#include "rcp/polyz.hpp"

namespace rcp {

/// d(0..limit; gens), one-dimensional coin-counting DP. Each unordered
/// representation is counted once. Throws std::overflow_error if a count
/// exceeds 64 bits.
std::vector<std::uint64_t> denumerant_table(std::uint64_t limit, std::span<const std::uint64_t> gens);

/// Number of nonnegative solutions of sum x_i * gens_i = m.
std::uint64_t denumerant(std::uint64_t m, std::span<const std::uint64_t> gens);

/// pq - p - q for coprime p, q >= 2.
std::int64_t frobenius_two(std::uint64_t p, std::uint64_t q);

/// c_pqr(k) for 0 <= k < pq as sum_{j >= 0} [d(k-1-jr; p,q) - d(k-jr; p,q)],
/// with d(m) = 0 for m < 0. For k < r only j = 0 contributes.
/// Throws std::domain_error for k outside [0, pq).
Coeff c_via_denumerant(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::int64_t k);

/// c_via_denumerant for every k in [0, pq), sharing one denumerant table.
std::vector<Coeff> c_via_denumerant_all(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// r(0..limit), the coefficients of 1/((1-x^p)(1-x^q)).
std::vector<std::uint64_t> representation_series(std::uint64_t p, std::uint64_t q, std::uint64_t limit);

}  // namespace rcp
