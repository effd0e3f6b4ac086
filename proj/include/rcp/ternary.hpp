#pragma once

// Closed forms and height predicates for binary (pq) and ternary (pqr)
// indices, p < q < r odd primes.

#include <cstdint>
#include <vector>

#include "rcp/polyz.hpp"

namespace rcp {

/// The unique (rho, sigma) with (p-1)(q-1) = rho*p + sigma*q,
/// 0 <= rho <= q-2, 0 <= sigma <= p-2.
struct BinaryParams {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t rho = 0;
    std::uint64_t sigma = 0;
    std::uint64_t q_inv_mod_p = 0;  // cached for a_pq

    std::uint64_t phi() const { return (p - 1) * (q - 1); }
};

/// tau = (p-1)(q+r-1); verbinding_ok is qr > tau.
struct TernaryParams {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t tau = 0;
    bool verbinding_ok = false;

    std::uint64_t n() const { return p * q * r; }
    /// deg Psi_pqr = qr + tau.
    std::uint64_t psi_degree() const { return q * r + tau; }
};

struct Triple {
    std::uint64_t p, q, r;
    std::uint64_t n() const { return p * q * r; }
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// All odd prime triples p < q < r with pqr <= cap, ordered by (p, q, r).
std::vector<Triple> odd_prime_triples(std::uint64_t cap);

/// Throws std::domain_error unless p < q are odd primes.
BinaryParams rho_sigma(std::uint64_t p, std::uint64_t q);

/// Throws std::domain_error unless p < q < r are odd primes.
TernaryParams ternary_params(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// Coefficient of x^k in Phi_pq from the rho/sigma closed form; 0 off [0, phi(pq)].
int a_pq(const BinaryParams& bp, std::int64_t k);

/// Coefficient of x^k in Psi_pq = -(1 + ... + x^{p-1}) + x^q (1 + ... + x^{p-1}).
int psi_pq_coeff(std::uint64_t p, std::uint64_t q, std::int64_t k);

/// c_pqr(k) = sum_j a_pq(k - jr) c_pq(j). Only the at most p-1 indices j
/// with 0 <= k - jr <= phi(pq) are visited.
Coeff c_pqr_convolution(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::int64_t k);
Coeff c_pqr_convolution(const BinaryParams& bp, std::uint64_t r, std::int64_t k);

/// c_pqr(k) from the short sum -sum_{j<=min(k/r,p-1)} a_pq(k - jr) for k <= tau,
/// zero on (tau, qr) and c(k + qr) = -c(k). Requires qr > tau.
Coeff c_pqr_verbinding(const TernaryParams& tp, std::int64_t k);
Coeff c_pqr_verbinding(const TernaryParams& tp, const BinaryParams& bp, std::int64_t k);

/// Phi_pq(x) (1 + x^r + ... + x^{(p-1)r}); degree tau, self-reciprocal.
IntPoly e_polynomial(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// min(p-1, floor((p-1)(q-1)/r) + 1).
std::uint64_t height_bound_bang(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// max{min(rho+1, sigma+1), min(q-1-rho, p-1-sigma)}; requires qr > tau.
std::uint64_t height_bound_sigma(const TernaryParams& tp, const BinaryParams& bp);

enum class BeiterClass { MaxHeight, Below };

/// MaxHeight iff q = r = +-1 (mod p) and r(p-2) < (p-1)(q-1); then h(Psi_pqr) = p-1.
BeiterClass beiter_analogue_classify(std::uint64_t p, std::uint64_t q, std::uint64_t r);

struct CoeffAt {
    std::int64_t k;
    Coeff value;
    friend bool operator==(const CoeffAt&, const CoeffAt&) = default;
};

/// Predicted extremal coefficients and value set for a MaxHeight triple.
struct ExtremeProfile {
    std::vector<CoeffAt> entries;  // ascending in k
    std::vector<Coeff> values;     // -(p-1) .. p-1
};

/// Throws std::domain_error if the triple is not MaxHeight.
ExtremeProfile extreme_profile(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// Predicted V_{3qr} and, for the non-flat cases, the two stated extremal positions.
struct DrieClass {
    std::vector<Coeff> values;
    std::vector<CoeffAt> extremal;
};

/// Requires 3 < q < r primes.
DrieClass drie_classify(std::uint64_t q, std::uint64_t r);

/// r > (p-1)(q-1); true forces Psi_pqr flat.
bool flat_by_large_r(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// h(Phi_n) * h(Psi_n), which is h(Psi_{np}) whenever p is a prime with
/// p not dividing n and p > phi(n). Throws std::domain_error otherwise.
Coeff height_product(std::uint64_t n, std::uint64_t p);

struct ChernickResult {
    std::uint64_t carmichael = 0;  // (6k+1)(12k+1)(18k+1)
    Coeff coefficient = 0;         // c_C(24k+2)
    Coeff height = 0;
};

/// Evaluated through the short-sum closed form only. Throws std::domain_error
/// unless 6k+1, 12k+1, 18k+1 are all prime.
ChernickResult chernick_check(std::uint64_t k);

/// Height of Psi_pqr for qr > tau without building the polynomial: scans
/// k <= tau/2 using c(tau - k) = c(k).
Coeff ternary_height_closed_form(const TernaryParams& tp);

struct Realization {
    std::uint64_t p, q, r;
    std::int64_t k;
    friend bool operator==(const Realization&, const Realization&) = default;
};

/// A triple and index with c_pqr(k) = m. Throws std::domain_error for m = 0 and
/// std::runtime_error when no q <= q_cap works.
Realization realize_value(std::int64_t m, std::uint64_t q_cap = 1'000'000);

}  // namespace rcp
