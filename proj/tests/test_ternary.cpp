#include <doctest.h>

#include "oracle.hpp"
#include "rcp/cyclo.hpp"
#include "rcp/ternary.hpp"

using namespace rcp;

namespace {

std::vector<Triple> small_triples() { return odd_prime_triples(20'000); }

}  // namespace

TEST_CASE("odd_prime_triples") {
    const auto t = odd_prime_triples(105);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == Triple{3, 5, 7});
    for (const auto& x : small_triples()) {
        REQUIRE(x.p < x.q);
        REQUIRE(x.q < x.r);
        REQUIRE(x.p > 2);
        REQUIRE(x.n() <= 20'000);
    }
}

TEST_CASE("rho_sigma matches enumeration") {
    const auto bp = rho_sigma(3, 5);
    CHECK(bp.rho == 1);
    CHECK(bp.sigma == 1);
    CHECK_THROWS_AS(rho_sigma(5, 3), std::domain_error);
    CHECK_THROWS_AS(rho_sigma(3, 9), std::domain_error);
    CHECK_THROWS_AS(rho_sigma(2, 5), std::domain_error);
    for (std::uint64_t p = 3; p < 60; p += 2) {
        if (!oracle::trial_prime(p)) continue;
        for (std::uint64_t q = p + 2; q < 300; q += 2) {
            if (!oracle::trial_prime(q)) continue;
            const auto b = rho_sigma(p, q);
            const auto [rho, sigma] = oracle::enumerate_rho_sigma(p, q);
            REQUIRE(b.rho == rho);
            REQUIRE(b.sigma == sigma);
        }
    }
}

TEST_CASE("a_pq and psi_pq_coeff agree with the oracle") {
    for (std::uint64_t p = 3; p < 40; p += 2) {
        if (!oracle::trial_prime(p)) continue;
        for (std::uint64_t q = p + 2; q < 120; q += 2) {
            if (!oracle::trial_prime(q)) continue;
            const auto phi = oracle::cyclotomic(p * q);
            const auto psi = oracle::reciprocal_cyclotomic(p * q);
            const auto bp = rho_sigma(p, q);
            for (std::int64_t k = -3; k <= static_cast<std::int64_t>(p * q) + 3; ++k) {
                const long long want_a = k >= 0 && k < static_cast<std::int64_t>(phi.size()) ? phi[k] : 0;
                const long long want_c = k >= 0 && k < static_cast<std::int64_t>(psi.size()) ? psi[k] : 0;
                REQUIRE(a_pq(bp, k) == want_a);
                REQUIRE(psi_pq_coeff(p, q, k) == want_c);
            }
        }
    }
}

TEST_CASE("ternary coefficient examples") {
    CHECK(c_pqr_convolution(3, 11, 17, 17) == -2);
    const auto tp = ternary_params(3, 11, 17);
    CHECK(tp.tau == 2 * 27);
    CHECK(tp.verbinding_ok);
    CHECK(tp.psi_degree() == 241);
    CHECK(c_pqr_verbinding(tp, 17) == -2);
    CHECK(c_pqr_verbinding(tp, 40) == c_pqr_verbinding(tp, 14));
    CHECK(c_pqr_verbinding(tp, 100) == 0);
    // the short sum stops at j = p-1
    CHECK(c_pqr_verbinding(ternary_params(3, 5, 7), 21) == 1);
    CHECK_FALSE(ternary_params(11, 13, 17).verbinding_ok);
    CHECK_THROWS_AS(c_pqr_verbinding(ternary_params(11, 13, 17), 3), std::domain_error);
}

TEST_CASE("convolution and short sum agree with dense Psi") {
    for (const auto& t : small_triples()) {
        const IntPoly psi = psi_poly(t.n());
        const auto tp = ternary_params(t.p, t.q, t.r);
        const auto bp = rho_sigma(t.p, t.q);
        REQUIRE(psi.degree() == static_cast<std::ptrdiff_t>(tp.psi_degree()));
        for (std::int64_t k = 0; k <= psi.degree(); ++k) {
            REQUIRE(c_pqr_convolution(bp, t.r, k) == psi[k]);
            if (tp.verbinding_ok) REQUIRE(c_pqr_verbinding(tp, bp, k) == psi[k]);
        }
    }
}

TEST_CASE("e polynomial") {
    const IntPoly e = e_polynomial(3, 5, 7);
    CHECK(e.degree() == 22);
    CHECK(e[0] == 1);
    CHECK(is_self_reciprocal(e));
    CHECK(e_polynomial(3, 11, 17)[17] == 2);
}

TEST_CASE("height bounds hold on dense Psi") {
    CHECK(height_bound_bang(3, 5, 7) == 2);
    CHECK(height_bound_bang(3, 5, 11) == 1);
    CHECK(height_bound_bang(5, 7, 11) == 3);
    CHECK(height_bound_sigma(ternary_params(3, 11, 17), rho_sigma(3, 11)) == 2);
    CHECK(height_bound_sigma(ternary_params(7, 13, 19), rho_sigma(7, 13)) == 2);
    for (const auto& t : small_triples()) {
        const Coeff h = height(psi_poly(t.n()));
        REQUIRE(h <= static_cast<Coeff>(height_bound_bang(t.p, t.q, t.r)));
        const auto tp = ternary_params(t.p, t.q, t.r);
        if (tp.verbinding_ok) {
            REQUIRE(h <= static_cast<Coeff>(height_bound_sigma(tp, rho_sigma(t.p, t.q))));
            REQUIRE(ternary_height_closed_form(tp) == h);
        }
        if (flat_by_large_r(t.p, t.q, t.r)) REQUIRE(h == 1);
    }
}

TEST_CASE("maximal-height classification and profile") {
    CHECK(beiter_analogue_classify(3, 11, 17) == BeiterClass::MaxHeight);
    CHECK(beiter_analogue_classify(3, 5, 7) == BeiterClass::Below);
    CHECK_THROWS_AS(extreme_profile(3, 5, 7), std::domain_error);
    for (const auto& t : small_triples()) {
        const IntPoly psi = psi_poly(t.n());
        const bool max_h = height(psi) == static_cast<Coeff>(t.p - 1);
        REQUIRE((beiter_analogue_classify(t.p, t.q, t.r) == BeiterClass::MaxHeight) == max_h);
        if (!max_h) continue;
        const auto prof = extreme_profile(t.p, t.q, t.r);
        for (std::size_t i = 1; i < prof.entries.size(); ++i) REQUIRE(prof.entries[i - 1].k < prof.entries[i].k);
        for (const auto& e : prof.entries) REQUIRE(psi[e.k] == e.value);
        REQUIRE(coefficient_set_of(t.n(), psi).values == prof.values);
    }
}

TEST_CASE("p = 3 classification") {
    const auto flat = drie_classify(5, 7);
    CHECK(flat.values == std::vector<Coeff>{-1, 0, 1});
    CHECK(flat.extremal.empty());
    CHECK(drie_classify(11, 17).values == std::vector<Coeff>{-2, -1, 0, 1, 2});
    CHECK_THROWS_AS(drie_classify(3, 7), std::domain_error);
    for (const auto& t : small_triples()) {
        if (t.p != 3) continue;
        const IntPoly psi = psi_poly(t.n());
        const auto cls = drie_classify(t.q, t.r);
        REQUIRE(coefficient_set_of(t.n(), psi).values == cls.values);
        for (const auto& e : cls.extremal) REQUIRE(psi[e.k] == e.value);
    }
}

TEST_CASE("height_product") {
    CHECK(height_product(15, 11) == 1);
    CHECK(height_product(561, 331) == 4);
    CHECK(height_product(7, 11) == 1);
    CHECK_THROWS_AS(height_product(15, 7), std::domain_error);
    CHECK_THROWS_AS(height_product(15, 5), std::domain_error);
    CHECK(height_product(105, 53) == height(psi_poly(105 * 53)));
}

TEST_CASE("Chernick Carmichael numbers") {
    const auto c1 = chernick_check(1);
    CHECK(c1.carmichael == 1729);
    CHECK(c1.coefficient == -2);
    CHECK(c1.height == 2);
    CHECK(c1.height == height(psi_poly(1729)));
    CHECK(psi_poly(1729)[26] == -2);
    CHECK(chernick_check(6).carmichael == 294'409);
    CHECK_THROWS_AS(chernick_check(2), std::domain_error);
}

TEST_CASE("realize_value") {
    CHECK(realize_value(-2) == Realization{3, 11, 17, 17});
    const auto one = realize_value(1);
    CHECK(one.p == 3);
    CHECK(one.q == 5);
    CHECK(one.r == 7);
    CHECK(psi_poly(105)[one.k] == 1);
    CHECK_THROWS_AS(realize_value(0), std::domain_error);
    for (std::int64_t m : {-4, -3, -1, 2, 3, 4}) {
        const auto rv = realize_value(m);
        REQUIRE(psi_poly(rv.p * rv.q * rv.r)[rv.k] == m);
    }
}
