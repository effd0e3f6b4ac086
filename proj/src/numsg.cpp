#include "rcp/numsg.hpp"

#include <stdexcept>

#include "rcp/arith.hpp"

namespace rcp {

std::vector<std::uint64_t> denumerant_table(std::uint64_t limit, std::span<const std::uint64_t> gens) {
    if (gens.empty()) throw std::domain_error("denumerant: no generators");
    std::vector<std::uint64_t> d(limit + 1, 0);
    d[0] = 1;
    for (std::uint64_t g : gens) {
        if (g == 0) throw std::domain_error("denumerant: generators must be positive");
        for (std::uint64_t m = g; m <= limit; ++m) {
            if (__builtin_add_overflow(d[m], d[m - g], &d[m])) throw std::overflow_error("denumerant: overflow");
        }
    }
    return d;
}

std::uint64_t denumerant(std::uint64_t m, std::span<const std::uint64_t> gens) {
    return denumerant_table(m, gens)[m];
}

std::int64_t frobenius_two(std::uint64_t p, std::uint64_t q) {
    if (p < 2 || q < 2 || gcd(p, q) != 1) throw std::domain_error("frobenius_two: need coprime p, q >= 2");
    return static_cast<std::int64_t>(p * q) - static_cast<std::int64_t>(p) - static_cast<std::int64_t>(q);
}

namespace {

void require_triple(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    if (!(2 < p && p < q && q < r && is_prime(p) && is_prime(q) && is_prime(r))) {
        throw std::domain_error("c_via_denumerant: expected odd primes p < q < r");
    }
}

Coeff from_table(const std::vector<std::uint64_t>& d, std::uint64_t r, std::int64_t k) {
    auto at = [&](std::int64_t m) { return m < 0 ? Coeff{0} : static_cast<Coeff>(d[static_cast<std::size_t>(m)]); };
    Coeff c = 0;
    for (std::int64_t m = k; m >= 0; m -= static_cast<std::int64_t>(r)) c += at(m - 1) - at(m);
    return c;
}

}  // namespace

Coeff c_via_denumerant(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::int64_t k) {
    require_triple(p, q, r);
    if (k < 0 || static_cast<std::uint64_t>(k) >= p * q) {
        throw std::domain_error("c_via_denumerant: k must lie in [0, pq)");
    }
    const std::uint64_t gens[] = {p, q};
    return from_table(denumerant_table(static_cast<std::uint64_t>(k), gens), r, k);
}

std::vector<Coeff> c_via_denumerant_all(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    require_triple(p, q, r);
    const std::uint64_t gens[] = {p, q};
    const auto d = denumerant_table(p * q, gens);
    std::vector<Coeff> out(p * q);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = from_table(d, r, static_cast<std::int64_t>(k));
    return out;
}

std::vector<std::uint64_t> representation_series(std::uint64_t p, std::uint64_t q, std::uint64_t limit) {
    if (p == 0 || q == 0 || gcd(p, q) != 1) throw std::domain_error("representation_series: need coprime p, q");
    auto s = series_div_one_minus_xd(series_div_one_minus_xd(IntPoly{1}, p, limit), q, limit);
    std::vector<std::uint64_t> out(limit + 1, 0);
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) out[i] = static_cast<std::uint64_t>(s.coeffs()[i]);
    return out;
}

}  // namespace rcp
