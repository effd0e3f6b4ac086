#pragma once

// Cyclotomic polynomials Phi_n and reciprocal cyclotomic polynomials
// Psi_n = (x^n - 1) / Phi_n, built from the Moebius product over divisors.

#include <cstdint>
#include <vector>

#include "rcp/arith.hpp"
#include "rcp/polyz.hpp"

namespace rcp {

/// Upper bound on the degree of any polynomial a constructor may allocate.
struct Budget {
    std::size_t max_degree = std::size_t{1} << 26;
};

/// Thrown when a requested polynomial would exceed the Budget.
class BudgetExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Phi_n; degree phi(n).
IntPoly phi_poly(std::uint64_t n, const Budget& budget = {});

/// Psi_n; degree n - phi(n), monic, constant term -1 for n > 1, Psi_1 = 1.
IntPoly psi_poly(std::uint64_t n, const Budget& budget = {});

/// Psi_n as (x^n - 1) / Phi_n by long division. Slow; cross-checks psi_poly.
IntPoly psi_via_division(std::uint64_t n, const Budget& budget = {});

/// Right-hand sides of the transformation laws for Psi:
///   1: (1 - x^n) Psi_n(-x)                   == Psi_{2n}, n odd, n > 1
///   2: Psi_n(x^p)                            == Psi_{pn}, p prime, p | n
///   3: Psi_n(x^p) Phi_n(x)                   == Psi_{pn}, p prime, p does not divide n
///   4: Psi_{rad(n)}(x^{n/rad(n)})            == Psi_n
///   5: -x^{n-phi(n)} Psi_n(1/x)              == Psi_n, n > 1
/// `p` is ignored for parts 1, 4 and 5. Throws std::domain_error on a
/// violated precondition.
IntPoly blup_transform(int part, std::uint64_t n, std::uint64_t p = 0, const Budget& budget = {});

/// The set V_n of coefficient values of Psi_n, ascending.
struct CoeffSet {
    std::uint64_t n = 1;
    std::vector<Coeff> values;

    bool contains(Coeff v) const;
    friend bool operator==(const CoeffSet&, const CoeffSet&) = default;
};

CoeffSet coefficient_set(std::uint64_t n, const Budget& budget = {});
CoeffSet coefficient_set_of(std::uint64_t n, const IntPoly& psi);

/// First `count` Taylor coefficients of 1/Phi_n at 0. Periodic with period n.
std::vector<Coeff> inverse_phi_taylor(std::uint64_t n, std::size_t count, const Budget& budget = {});

/// Whether the middle coefficient of Psi_n vanishes. Requires n > 1 and
/// n - phi(n) even, otherwise std::domain_error.
bool midpoint_zero_check(std::uint64_t n, const Budget& budget = {});

}  // namespace rcp
