#pragma once

// Dense integer polynomials and truncated power series with checked 64-bit
// coefficients. Overflow is always an error (std::overflow_error).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace rcp {

using Coeff = std::int64_t;

/// Raised by exact_div when the divisor does not divide the dividend.
class DivisibilityError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Ascending coefficients; index k holds the coefficient of x^k. The zero
/// polynomial has no coefficients and otherwise the top coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Coeff> coeffs);
    IntPoly(std::initializer_list<Coeff> coeffs);

    static IntPoly monomial(Coeff c, std::size_t k);

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; 0 outside [0, degree].
    Coeff operator[](std::ptrdiff_t k) const {
        return k < 0 || k > degree() ? 0 : coeffs_[static_cast<std::size_t>(k)];
    }

    std::span<const Coeff> coeffs() const { return coeffs_; }
    std::vector<Coeff> release() && { return std::move(coeffs_); }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

  private:
    void trim();
    std::vector<Coeff> coeffs_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

IntPoly mul(const IntPoly& a, const IntPoly& b);

/// Quotient q with a = q * b. Throws DivisibilityError on a nonzero remainder
/// and std::domain_error when b is zero.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// a * (1 - x^d) truncated to degree `limit`.
IntPoly series_mul_one_minus_xd(IntPoly a, std::uint64_t d, std::size_t limit);

/// a / (1 - x^d) truncated to degree `limit` (stride-d prefix sums).
IntPoly series_div_one_minus_xd(IntPoly a, std::uint64_t d, std::size_t limit);

Coeff height(const IntPoly& a);
bool is_flat(const IntPoly& a);

/// coeff_k == -coeff_{deg-k} for every k. Throws std::domain_error on zero input.
bool is_anti_self_reciprocal(const IntPoly& a);
bool is_self_reciprocal(const IntPoly& a);

/// f(x^m).
IntPoly inflate(const IntPoly& a, std::uint64_t m);
/// f(-x).
IntPoly negate_x(const IntPoly& a);
/// x^deg f(1/x).
IntPoly reversed(const IntPoly& a);

/// Smallest k with |coeff_k| == height(a); -1 for the zero polynomial.
std::ptrdiff_t first_extremal_index(const IntPoly& a);

namespace series {

// In-place kernels on a fixed-length buffer; the buffer length is limit + 1.
void mul_one_minus_xd(std::span<Coeff> buf, std::uint64_t d);
void div_one_minus_xd(std::span<Coeff> buf, std::uint64_t d);

}  // namespace series

namespace checked {

inline Coeff add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}
inline Coeff sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}
inline Coeff mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}
inline Coeff abs(Coeff a) {
    if (a == INT64_MIN) throw std::overflow_error("coefficient overflow");
    return a < 0 ? -a : a;
}

}  // namespace checked

}  // namespace rcp
