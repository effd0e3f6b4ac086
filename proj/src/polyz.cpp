#include "rcp/polyz.hpp"

#include <algorithm>

namespace rcp {

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly IntPoly::monomial(Coeff c, std::size_t k) {
    std::vector<Coeff> v(k + 1, 0);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Coeff> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
    for (std::size_t k = 0; k < out.size(); ++k) {
        const auto i = static_cast<std::ptrdiff_t>(k);
        out[k] = checked::add(a[i], b[i]);
    }
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Coeff> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : out) c = checked::sub(0, c);
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // iterate over the sparser operand's nonzero terms
    const IntPoly& sparse = std::count(a.coeffs().begin(), a.coeffs().end(), 0) >
                                    std::count(b.coeffs().begin(), b.coeffs().end(), 0)
                                ? a
                                : b;
    const IntPoly& dense = &sparse == &a ? b : a;
    const auto ds = dense.coeffs();
    std::vector<Coeff> out(static_cast<std::size_t>(a.degree() + b.degree() + 1), 0);
    const auto ss = sparse.coeffs();
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const Coeff s = ss[i];
        if (s == 0) continue;
        Coeff* dst = out.data() + i;
        for (std::size_t j = 0; j < ds.size(); ++j) {
            dst[j] = checked::add(dst[j], checked::mul(s, ds[j]));
        }
    }
    return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw DivisibilityError("exact_div: nonzero remainder");

    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Coeff lead = bc[db];
    std::vector<std::pair<std::size_t, Coeff>> terms;
    for (std::size_t j = 0; j < db; ++j) {
        if (bc[j] != 0) terms.emplace_back(j, bc[j]);
    }

    std::vector<Coeff> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t dq = rem.size() - 1 - db;
    std::vector<Coeff> quot(dq + 1, 0);
    for (std::size_t i = dq + 1; i-- > 0;) {
        const Coeff top = rem[i + db];
        if (top == 0) continue;
        if (top % lead != 0) throw DivisibilityError("exact_div: nonzero remainder");
        const Coeff qi = top / lead;
        quot[i] = qi;
        rem[i + db] = 0;
        for (const auto& [j, bj] : terms) rem[i + j] = checked::sub(rem[i + j], checked::mul(qi, bj));
    }
    for (std::size_t j = 0; j < db; ++j) {
        if (rem[j] != 0) throw DivisibilityError("exact_div: nonzero remainder");
    }
    return IntPoly(std::move(quot));
}

namespace series {

void mul_one_minus_xd(std::span<Coeff> buf, std::uint64_t d) {
    if (d == 0) throw std::domain_error("series: stride must be positive");
    if (d >= buf.size()) return;
    for (std::size_t k = buf.size(); k-- > d;) buf[k] = checked::sub(buf[k], buf[k - d]);
}

void div_one_minus_xd(std::span<Coeff> buf, std::uint64_t d) {
    if (d == 0) throw std::domain_error("series: stride must be positive");
    for (std::size_t k = d; k < buf.size(); ++k) buf[k] = checked::add(buf[k], buf[k - d]);
}

}  // namespace series

namespace {

std::vector<Coeff> to_buffer(IntPoly a, std::size_t limit) {
    auto v = std::move(a).release();
    v.resize(limit + 1, 0);
    return v;
}

}  // namespace

IntPoly series_mul_one_minus_xd(IntPoly a, std::uint64_t d, std::size_t limit) {
    auto buf = to_buffer(std::move(a), limit);
    series::mul_one_minus_xd(buf, d);
    return IntPoly(std::move(buf));
}

IntPoly series_div_one_minus_xd(IntPoly a, std::uint64_t d, std::size_t limit) {
    auto buf = to_buffer(std::move(a), limit);
    series::div_one_minus_xd(buf, d);
    return IntPoly(std::move(buf));
}

Coeff height(const IntPoly& a) {
    Coeff h = 0;
    for (Coeff c : a.coeffs()) h = std::max(h, checked::abs(c));
    return h;
}

bool is_flat(const IntPoly& a) { return height(a) == 1; }

bool is_anti_self_reciprocal(const IntPoly& a) {
    if (a.is_zero()) throw std::domain_error("is_anti_self_reciprocal: zero polynomial");
    const auto c = a.coeffs();
    for (std::size_t k = 0, j = c.size() - 1; k <= j; ++k, --j) {
        if (c[k] != -c[j]) return false;
        if (j == 0) break;
    }
    return true;
}

bool is_self_reciprocal(const IntPoly& a) {
    const auto c = a.coeffs();
    return std::equal(c.begin(), c.end(), c.rbegin());
}

IntPoly inflate(const IntPoly& a, std::uint64_t m) {
    if (m == 0) throw std::domain_error("inflate: exponent must be positive");
    if (a.is_zero() || m == 1) return a;
    const auto c = a.coeffs();
    std::vector<Coeff> out((c.size() - 1) * m + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) out[k * m] = c[k];
    return IntPoly(std::move(out));
}

IntPoly negate_x(const IntPoly& a) {
    std::vector<Coeff> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = checked::sub(0, out[k]);
    return IntPoly(std::move(out));
}

IntPoly reversed(const IntPoly& a) {
    std::vector<Coeff> out(a.coeffs().rbegin(), a.coeffs().rend());
    return IntPoly(std::move(out));
}

std::ptrdiff_t first_extremal_index(const IntPoly& a) {
    const Coeff h = height(a);
    const auto c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (checked::abs(c[k]) == h) return static_cast<std::ptrdiff_t>(k);
    }
    return -1;
}

}  // namespace rcp
