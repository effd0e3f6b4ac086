#pragma once

// Elementary multiplicative number theory on 64-bit integers.

#include <cstdint>
#include <string>
#include <vector>

namespace rcp {

/// Largest value accepted by factorize().
inline constexpr std::uint64_t kFactorCap = std::uint64_t{1} << 62;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n together with its prime factorization; primes strictly increasing,
/// empty for n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division by primes below 2^20, then Pollard-Brent rho on what is left.
/// Throws std::domain_error for n == 0 or n > kFactorCap.
Factorization factorize(std::uint64_t n);

/// Product of prime^exponent. Throws std::overflow_error past 2^64.
std::uint64_t recompose(const Factorization& f);

int mobius(const Factorization& f);
std::uint64_t euler_phi(const Factorization& f);
std::uint64_t radical(const Factorization& f);
std::vector<std::uint64_t> divisors(const Factorization& f);

/// Number of distinct odd primes dividing n (the "order" of Phi_n and Psi_n).
unsigned odd_prime_order(const Factorization& f);

bool is_squarefree(const Factorization& f);

/// "1", "7", "2^2*3*5".
std::string factor_string(const Factorization& f);

// Sieves for range work.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
std::vector<std::uint64_t> totients_up_to(std::uint64_t limit);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Inverse of a modulo m (m >= 2, gcd(a, m) = 1). Throws std::domain_error otherwise.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace rcp
