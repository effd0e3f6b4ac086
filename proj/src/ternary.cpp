#include "rcp/ternary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rcp/arith.hpp"
#include "rcp/cyclo.hpp"

namespace rcp {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool odd_prime(u64 v) { return v > 2 && is_prime(v); }

void require_triple(u64 p, u64 q, u64 r) {
    if (!(p < q && q < r && odd_prime(p) && odd_prime(q) && odd_prime(r))) {
        throw std::domain_error("expected odd primes p < q < r, got " + std::to_string(p) + "," +
                                std::to_string(q) + "," + std::to_string(r));
    }
}

// floor division for possibly negative numerators
i64 floor_div(i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

std::vector<Triple> odd_prime_triples(u64 cap) {
    std::vector<Triple> out;
    if (cap < 105) return out;
    const auto primes = primes_up_to(cap / 15);
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const u64 p = primes[i];
        if (p * p * p > cap) break;
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const u64 q = primes[j];
            if (p * q * q > cap) break;
            for (std::size_t l = j + 1; l < primes.size(); ++l) {
                const u64 r = primes[l];
                if (p * q * r > cap) break;
                out.push_back({p, q, r});
            }
        }
    }
    return out;
}

BinaryParams rho_sigma(u64 p, u64 q) {
    if (!(p < q && odd_prime(p) && odd_prime(q))) {
        throw std::domain_error("rho_sigma: expected odd primes p < q");
    }
    const u64 total = (p - 1) * (q - 1);
    const u64 q_inv = inverse_mod(q % p, p);
    const u64 sigma = static_cast<u64>(static_cast<unsigned __int128>(total % p) * q_inv % p);
    if (sigma * q > total) throw std::logic_error("rho_sigma: negative rho");
    const u64 rho = (total - sigma * q) / p;
    if (rho * p + sigma * q != total || rho > q - 2 || sigma > p - 2) {
        throw std::logic_error("rho_sigma: decomposition outside its window");
    }
    return {p, q, rho, sigma, q_inv};
}

TernaryParams ternary_params(u64 p, u64 q, u64 r) {
    require_triple(p, q, r);
    const u64 tau = (p - 1) * (q + r - 1);
    return {p, q, r, tau, q * r > tau};
}

int a_pq(const BinaryParams& bp, i64 k) {
    if (k < 0 || static_cast<u64>(k) > bp.phi()) return 0;
    const u64 p = bp.p, q = bp.q;
    const auto fits = [&](u64 value, u64 i_max, u64 j_max) {
        const u64 j = (value % p) * bp.q_inv_mod_p % p;
        return j <= j_max && j * q <= value && (value - j * q) / p <= i_max;
    };
    const u64 uk = static_cast<u64>(k);
    if (fits(uk, bp.rho, bp.sigma)) return 1;
    if (uk >= 1 && fits(uk - 1, q - 2 - bp.rho, p - 2 - bp.sigma)) return -1;
    return 0;
}

int psi_pq_coeff(u64 p, u64 q, i64 k) {
    if (k < 0) return 0;
    const u64 uk = static_cast<u64>(k);
    if (uk < p) return -1;
    if (uk >= q && uk < p + q) return 1;
    return 0;
}

Coeff c_pqr_convolution(const BinaryParams& bp, u64 r, i64 k) {
    const u64 degree = bp.q * r + (bp.p - 1) * (bp.q + r - 1);
    if (k < 0 || static_cast<u64>(k) > degree) return 0;
    const i64 ri = static_cast<i64>(r);
    const i64 phi = static_cast<i64>(bp.phi());
    const i64 j_hi = k / ri;
    const i64 j_lo = std::max<i64>(0, -floor_div(phi - k, ri));
    Coeff sum = 0;
    for (i64 j = j_lo; j <= j_hi; ++j) {
        const int c = psi_pq_coeff(bp.p, bp.q, j);
        if (c != 0) sum += a_pq(bp, k - j * ri) * c;
    }
    return sum;
}

Coeff c_pqr_convolution(u64 p, u64 q, u64 r, i64 k) {
    require_triple(p, q, r);
    return c_pqr_convolution(rho_sigma(p, q), r, k);
}

Coeff c_pqr_verbinding(const TernaryParams& tp, const BinaryParams& bp, i64 k) {
    if (!tp.verbinding_ok) throw std::domain_error("c_pqr_verbinding: requires qr > tau");
    if (k < 0 || static_cast<u64>(k) > tp.psi_degree()) return 0;
    const u64 uk = static_cast<u64>(k);
    const u64 qr = tp.q * tp.r;
    if (uk >= qr) return -c_pqr_verbinding(tp, bp, k - static_cast<i64>(qr));
    if (uk > tp.tau) return 0;
    const i64 ri = static_cast<i64>(tp.r);
    const i64 phi = static_cast<i64>(bp.phi());
    const i64 j_hi = std::min<i64>(k / ri, static_cast<i64>(tp.p) - 1);
    const i64 j_lo = std::max<i64>(0, -floor_div(phi - k, ri));
    Coeff sum = 0;
    for (i64 j = j_lo; j <= j_hi; ++j) sum += a_pq(bp, k - j * ri);
    return -sum;
}

Coeff c_pqr_verbinding(const TernaryParams& tp, i64 k) {
    return c_pqr_verbinding(tp, rho_sigma(tp.p, tp.q), k);
}

IntPoly e_polynomial(u64 p, u64 q, u64 r) {
    require_triple(p, q, r);
    std::vector<Coeff> comb((p - 1) * r + 1, 0);
    for (u64 i = 0; i < p; ++i) comb[i * r] = 1;
    return mul(phi_poly(p * q), IntPoly(std::move(comb)));
}

u64 height_bound_bang(u64 p, u64 q, u64 r) {
    require_triple(p, q, r);
    return std::min(p - 1, (p - 1) * (q - 1) / r + 1);
}

u64 height_bound_sigma(const TernaryParams& tp, const BinaryParams& bp) {
    if (!tp.verbinding_ok) throw std::domain_error("height_bound_sigma: requires qr > tau");
    if (bp.p != tp.p || bp.q != tp.q) throw std::domain_error("height_bound_sigma: mismatched parameters");
    const u64 lower = std::min(bp.rho + 1, bp.sigma + 1);
    const u64 upper = std::min(tp.q - 1 - bp.rho, tp.p - 1 - bp.sigma);
    return std::max(lower, upper);
}

BeiterClass beiter_analogue_classify(u64 p, u64 q, u64 r) {
    require_triple(p, q, r);
    const u64 qm = q % p, rm = r % p;
    const bool congruent = qm == rm && (qm == 1 || qm == p - 1);
    const bool short_gap = r * (p - 2) < (p - 1) * (q - 1);
    return congruent && short_gap ? BeiterClass::MaxHeight : BeiterClass::Below;
}

ExtremeProfile extreme_profile(u64 p, u64 q, u64 r) {
    if (beiter_analogue_classify(p, q, r) != BeiterClass::MaxHeight) {
        throw std::domain_error("extreme_profile: triple is not of maximal height");
    }
    ExtremeProfile prof;
    const i64 ri = static_cast<i64>(r), qi = static_cast<i64>(q);
    const bool minus_one = q % p == p - 1;
    for (i64 m = 0; m <= static_cast<i64>(p) - 2; ++m) {
        if (minus_one) {
            prof.entries.push_back({m * ri, -1 - m});
            prof.entries.push_back({(m + qi) * ri, m + 1});
        } else {
            prof.entries.push_back({1 + m * ri, 1 + m});
            prof.entries.push_back({1 + (m + qi) * ri, -1 - m});
        }
    }
    prof.entries.push_back({2, 0});
    std::sort(prof.entries.begin(), prof.entries.end(), [](const CoeffAt& a, const CoeffAt& b) { return a.k < b.k; });
    for (i64 v = -static_cast<i64>(p - 1); v <= static_cast<i64>(p - 1); ++v) prof.values.push_back(v);
    return prof;
}

DrieClass drie_classify(u64 q, u64 r) {
    if (!(3 < q && q < r && is_prime(q) && is_prime(r))) {
        throw std::domain_error("drie_classify: expected primes 3 < q < r");
    }
    const i64 ri = static_cast<i64>(r), qr = static_cast<i64>(q * r);
    if (q % 3 == 1 && r % 3 == 1 && r + 7 <= 2 * q) {
        return {{-2, -1, 0, 1, 2}, {{ri + 1, 2}, {ri + 1 + qr, -2}}};
    }
    if (q % 3 == 2 && r % 3 == 2 && r + 3 <= 2 * q) {
        return {{-2, -1, 0, 1, 2}, {{ri, -2}, {ri + qr, 2}}};
    }
    return {{-1, 0, 1}, {}};
}

bool flat_by_large_r(u64 p, u64 q, u64 r) {
    require_triple(p, q, r);
    return r > (p - 1) * (q - 1);
}

Coeff height_product(u64 n, u64 p) {
    if (n == 0 || !is_prime(p) || n % p == 0) {
        throw std::domain_error("height_product: need a prime p not dividing n");
    }
    if (p <= euler_phi(factorize(n))) throw std::domain_error("height_product: need p > phi(n)");
    return checked::mul(height(phi_poly(n)), height(psi_poly(n)));
}

Coeff ternary_height_closed_form(const TernaryParams& tp) {
    const auto bp = rho_sigma(tp.p, tp.q);
    Coeff h = 0;
    for (u64 k = 0; k <= tp.tau / 2; ++k) {
        h = std::max(h, checked::abs(c_pqr_verbinding(tp, bp, static_cast<i64>(k))));
    }
    return h;
}

ChernickResult chernick_check(u64 k) {
    const u64 p = 6 * k + 1, q = 12 * k + 1, r = 18 * k + 1;
    if (!(is_prime(p) && is_prime(q) && is_prime(r))) {
        throw std::domain_error("chernick_check: 6k+1, 12k+1, 18k+1 are not all prime for k=" + std::to_string(k));
    }
    const auto tp = ternary_params(p, q, r);
    const auto bp = rho_sigma(p, q);
    return {tp.n(), c_pqr_verbinding(tp, bp, static_cast<i64>(24 * k + 2)), ternary_height_closed_form(tp)};
}

Realization realize_value(i64 m, u64 q_cap) {
    if (m == 0) throw std::domain_error("realize_value: m must be nonzero");
    if (m == 1 || m == -1) {
        const auto bp = rho_sigma(3, 5);
        for (i64 k = 0;; ++k) {
            if (c_pqr_convolution(bp, 7, k) == m) return {3, 5, 7, k};
        }
    }
    const u64 abs_m = static_cast<u64>(m < 0 ? -m : m);
    u64 p = 3;
    while (p - 1 < abs_m || !is_prime(p)) p += 2;

    const auto primes = primes_up_to(q_cap * (p - 1) / (p - 2) + 1);
    const auto first = std::upper_bound(primes.begin(), primes.end(), p);
    for (auto qi = first; qi != primes.end() && *qi <= q_cap; ++qi) {
        const u64 q = *qi;
        if (q % p != p - 1) continue;
        for (auto ri = qi + 1; ri != primes.end() && *ri * (p - 2) < (p - 1) * (q - 1); ++ri) {
            const u64 r = *ri;
            if (r % p != p - 1) continue;
            const i64 j = static_cast<i64>(abs_m) - 1;
            const i64 k = m < 0 ? j * static_cast<i64>(r) : (j + static_cast<i64>(q)) * static_cast<i64>(r);
            return {p, q, r, k};
        }
    }
    throw std::runtime_error("realize_value: no triple found with q <= " + std::to_string(q_cap));
}

}  // namespace rcp
