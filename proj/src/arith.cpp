#include "rcp/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rcp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = u64{1} << 20;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

std::vector<u64> sieve(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

const std::vector<u64>& small_primes() {
    static const std::vector<u64> table = sieve(kTrialLimit);
    return table;
}

// Pollard-Brent; n odd composite with no factor below kTrialLimit.
u64 rho_split(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        constexpr u64 m = 128;
        u64 r = 1;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = rho_split(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are sufficient below 2^64.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0 || n > kFactorCap) throw std::domain_error("factorize: n out of range: " + std::to_string(n));
    Factorization f{n, {}};
    u64 rest = n;
    for (u64 p : small_primes()) {
        if (p * p > rest) break;
        if (rest % p) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) {
        std::vector<u64> big;
        if (rest < kTrialLimit * kTrialLimit) {
            big.push_back(rest);
        } else {
            split_large(rest, big);
        }
        std::sort(big.begin(), big.end());
        for (u64 p : big) {
            if (!f.factors.empty() && f.factors.back().prime == p) {
                ++f.factors.back().exponent;
            } else {
                f.factors.push_back({p, 1});
            }
        }
    }
    return f;
}

u64 recompose(const Factorization& f) {
    u64 n = 1;
    for (const auto& [p, e] : f.factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (__builtin_mul_overflow(n, p, &n)) throw std::overflow_error("recompose: overflow");
        }
    }
    return n;
}

int mobius(const Factorization& f) {
    for (const auto& pe : f.factors) {
        if (pe.exponent > 1) return 0;
    }
    return f.factors.size() % 2 ? -1 : 1;
}

u64 euler_phi(const Factorization& f) {
    u64 phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

u64 radical(const Factorization& f) {
    u64 r = 1;
    for (const auto& pe : f.factors) r *= pe.prime;
    return r;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

unsigned odd_prime_order(const Factorization& f) {
    return static_cast<unsigned>(
        std::count_if(f.factors.begin(), f.factors.end(), [](const PrimePower& pe) { return pe.prime != 2; }));
}

bool is_squarefree(const Factorization& f) { return mobius(f) != 0; }

std::string factor_string(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : f.factors) {
        if (!s.empty()) s += '*';
        s += std::to_string(p);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

std::vector<u64> primes_up_to(u64 limit) { return sieve(limit); }

std::vector<u64> totients_up_to(u64 limit) {
    std::vector<u64> phi(limit + 1);
    std::iota(phi.begin(), phi.end(), u64{0});
    for (u64 i = 2; i <= limit; ++i) {
        if (phi[i] != i) continue;
        for (u64 j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
    }
    return phi;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 inverse_mod(u64 a, u64 m) {
    if (m < 2) throw std::domain_error("inverse_mod: modulus must be >= 2");
    // extended Euclid on signed 128-bit to dodge overflow
    __int128 old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::domain_error("inverse_mod: not invertible");
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0) inv += m;
    return static_cast<u64>(inv);
}

}  // namespace rcp
