#include "rcp/cyclo.hpp"

#include <algorithm>
#include <string>

namespace rcp {

namespace {

void check_budget(std::uint64_t degree, const Budget& budget) {
    if (degree > budget.max_degree) {
        throw BudgetExceeded("degree " + std::to_string(degree) + " exceeds budget " +
                             std::to_string(budget.max_degree));
    }
}

Factorization radical_factorization(const Factorization& f) {
    Factorization r{radical(f), f.factors};
    for (auto& pe : r.factors) pe.exponent = 1;
    return r;
}

// Product of (1 - x^d)^{e_d} over divisors d of a squarefree m, truncated to
// degree `limit`. Exponent +1 factors are applied before -1 factors: after the
// multiplications every partial result is bounded by 2^(#multiplications), and
// after j divisions it equals the final series times the remaining binomials.
std::vector<Coeff> binomial_product(const Factorization& m, bool for_psi, std::size_t limit) {
    std::vector<std::uint64_t> mul_strides, div_strides;
    for (std::uint64_t d : divisors(m)) {
        if (for_psi && d == m.n) continue;
        const auto co = std::count_if(m.factors.begin(), m.factors.end(),
                                      [&](const PrimePower& pe) { return d % pe.prime != 0; });
        // mu(m/d) = (-1)^co; Phi uses mu(m/d), Psi uses -mu(m/d)
        const bool positive = (co % 2 == 0) != for_psi;
        (positive ? mul_strides : div_strides).push_back(d);
    }
    std::vector<Coeff> buf(limit + 1, 0);
    buf[0] = 1;
    for (auto d : mul_strides) series::mul_one_minus_xd(buf, d);
    for (auto d : div_strides) series::div_one_minus_xd(buf, d);
    return buf;
}

IntPoly phi_squarefree(const Factorization& m) {
    if (m.n == 1) return IntPoly{-1, 1};
    return IntPoly(binomial_product(m, false, euler_phi(m)));
}

IntPoly psi_squarefree(const Factorization& m) {
    if (m.n == 1) return IntPoly{1};
    auto buf = binomial_product(m, true, m.n - euler_phi(m));
    for (auto& c : buf) c = -c;
    return IntPoly(std::move(buf));
}

IntPoly x_pow_minus_one(std::uint64_t n) {
    std::vector<Coeff> v(n + 1, 0);
    v[0] = -1;
    v[n] = 1;
    return IntPoly(std::move(v));
}

}  // namespace

IntPoly phi_poly(std::uint64_t n, const Budget& budget) {
    const auto f = factorize(n);
    check_budget(euler_phi(f), budget);
    const auto rad = radical_factorization(f);
    return inflate(phi_squarefree(rad), n / rad.n);
}

IntPoly psi_poly(std::uint64_t n, const Budget& budget) {
    const auto f = factorize(n);
    check_budget(n - euler_phi(f), budget);
    const auto rad = radical_factorization(f);
    return inflate(psi_squarefree(rad), n / rad.n);
}

IntPoly psi_via_division(std::uint64_t n, const Budget& budget) {
    check_budget(n, budget);
    return exact_div(x_pow_minus_one(n), phi_poly(n, budget));
}

IntPoly blup_transform(int part, std::uint64_t n, std::uint64_t p, const Budget& budget) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::domain_error(std::string("blup_transform: ") + what);
    };
    require(n >= 1, "n must be positive");
    switch (part) {
        case 1: {
            require(n > 1 && n % 2 == 1, "part 1 needs odd n > 1");
            IntPoly one_minus_xn = -x_pow_minus_one(n);
            return mul(one_minus_xn, negate_x(psi_poly(n, budget)));
        }
        case 2:
            require(is_prime(p) && n % p == 0, "part 2 needs a prime p dividing n");
            return inflate(psi_poly(n, budget), p);
        case 3:
            require(is_prime(p) && n % p != 0, "part 3 needs a prime p not dividing n");
            return mul(inflate(psi_poly(n, budget), p), phi_poly(n, budget));
        case 4: {
            const auto r = radical(factorize(n));
            return inflate(psi_poly(r, budget), n / r);
        }
        case 5:
            require(n > 1, "part 5 needs n > 1");
            return -reversed(psi_poly(n, budget));
        default:
            throw std::domain_error("blup_transform: part must be in 1..5");
    }
}

bool CoeffSet::contains(Coeff v) const { return std::binary_search(values.begin(), values.end(), v); }

CoeffSet coefficient_set_of(std::uint64_t n, const IntPoly& psi) {
    std::vector<Coeff> v(psi.coeffs().begin(), psi.coeffs().end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return {n, std::move(v)};
}

CoeffSet coefficient_set(std::uint64_t n, const Budget& budget) {
    return coefficient_set_of(n, psi_poly(n, budget));
}

std::vector<Coeff> inverse_phi_taylor(std::uint64_t n, std::size_t count, const Budget& budget) {
    if (n == 0) throw std::domain_error("inverse_phi_taylor: n must be positive");
    const IntPoly psi = psi_poly(n, budget);
    // 1/Phi_n = -Psi_n (1 + x^n + x^{2n} + ...) and deg Psi_n < n
    std::vector<Coeff> out(count);
    for (std::size_t k = 0; k < count; ++k) out[k] = -psi[static_cast<std::ptrdiff_t>(k % n)];
    return out;
}

bool midpoint_zero_check(std::uint64_t n, const Budget& budget) {
    if (n <= 1) throw std::domain_error("midpoint_zero_check: n must exceed 1");
    const auto deg = n - euler_phi(factorize(n));
    if (deg % 2) throw std::domain_error("midpoint_zero_check: n - phi(n) is odd");
    return psi_poly(n, budget)[static_cast<std::ptrdiff_t>(deg / 2)] == 0;
}

}  // namespace rcp
