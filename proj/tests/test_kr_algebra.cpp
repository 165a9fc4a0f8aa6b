#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/errors.hpp"
#include "verlinde/kr_algebra.hpp"

#include <vector>

using namespace verlinde;

namespace {

std::vector<KRCoefficient> kr_basis(int bott) {
    return {KRCoefficient::unit(1, bott), KRCoefficient::eta(bott), KRCoefficient::eta2(bott),
            KRCoefficient::mu(1, bott)};
}

std::vector<KPlusCoefficient> kplus_basis() {
    return {KPlusCoefficient::beta(0), KPlusCoefficient::beta(1), KPlusCoefficient::beta(2),
            KPlusCoefficient::beta(3)};
}

} // namespace

TEST_CASE("coefficient ring presentation") {
    KRCoefficient one = KRCoefficient::unit();
    KRCoefficient eta = KRCoefficient::eta();
    KRCoefficient eta2 = KRCoefficient::eta2();
    KRCoefficient mu = KRCoefficient::mu();

    CHECK(eta + eta == KRCoefficient::zero());        // 2 eta = 0
    CHECK(eta * eta == eta2);                         // eta^2
    CHECK(eta * eta2 == KRCoefficient::zero());       // eta^3 = 0
    CHECK(eta2 * eta2 == KRCoefficient::zero());
    CHECK(mu * eta == KRCoefficient::zero());         // mu eta = 0
    CHECK(mu * eta2 == KRCoefficient::zero());
    CHECK(mu * mu == KRCoefficient::unit(4, 1));      // mu^2 = 4 b
    CHECK(one * mu == mu);
    // b is invertible: mu * mu * b^{-1} = 4
    CHECK(mu * mu * KRCoefficient::unit(1, -1) == KRCoefficient::unit(4));

    // grading is additive (honest Z-grading with the explicit Bott class)
    for (int m : {-1, 0, 1})
        for (int n : {-1, 0, 2})
            for (const auto& x : kr_basis(m))
                for (const auto& y : kr_basis(n)) {
                    int dx = 0, dy = 0, dp = 0;
                    REQUIRE(x.homogeneous_mod8(dx));
                    REQUIRE(y.homogeneous_mod8(dy));
                    KRCoefficient p = x * y;
                    REQUIRE(p.homogeneous_mod8(dp));
                    int expect = -(((-(dx + dy)) % 8 + 8) % 8); // in (-8, 0]
                    if (!p.is_zero()) CHECK(dp == expect);
                }
}

TEST_CASE("K(+) ring and conjugation") {
    KPlusCoefficient b1 = KPlusCoefficient::beta(1);
    CHECK(b1 * b1 == KPlusCoefficient::beta(2));
    CHECK(b1 * KPlusCoefficient::beta(3) == KPlusCoefficient::beta(0)); // beta^4 = 1
    CHECK(kplus_conj(b1) == KPlusCoefficient::beta(1, -1));
    CHECK(kplus_conj(KPlusCoefficient::beta(2)) == KPlusCoefficient::beta(2));
    CHECK(kplus_shift(KPlusCoefficient::beta(3), 2) == KPlusCoefficient::beta(1));
}

TEST_CASE("forgetful and realification tables") {
    CHECK(coeff_c(KRCoefficient::unit()) == KPlusCoefficient::beta(0));
    CHECK(coeff_c(KRCoefficient::eta()) == KPlusCoefficient::zero());
    CHECK(coeff_c(KRCoefficient::eta2()) == KPlusCoefficient::zero());
    CHECK(coeff_c(KRCoefficient::mu()) == KPlusCoefficient::beta(2, 2));
    CHECK(coeff_c(KRCoefficient::unit(1, 1)) == KPlusCoefficient::beta(0)); // c(b) = beta^4 = 1

    CHECK(coeff_r(KPlusCoefficient::beta(0)) == KRCoefficient::unit(2));
    CHECK(coeff_r(KPlusCoefficient::beta(1)) == KRCoefficient::eta2());
    CHECK(coeff_r(KPlusCoefficient::beta(2)) == KRCoefficient::mu());
    CHECK(coeff_r(KPlusCoefficient::beta(3)) == KRCoefficient::zero());
}

TEST_CASE("rc = 2 on the principal basis and after collapse everywhere") {
    for (const auto& y : kr_basis(0)) {
        KRCoefficient two_y = y + y;
        CHECK(coeff_r(coeff_c(y)) == two_y);
    }
    for (int m : {-2, -1, 1, 2})
        for (const auto& y : kr_basis(m)) {
            KRCoefficient two_y = y + y;
            CHECK(bott_collapse(coeff_r(coeff_c(y))) == bott_collapse(two_y));
        }
}

TEST_CASE("cr = 1 + conj on K(+), forced by c(eta^2) = 0") {
    for (const auto& x : kplus_basis()) {
        KPlusCoefficient lhs = coeff_c(coeff_r(x));
        KPlusCoefficient rhs = x + kplus_conj(x);
        CHECK(lhs == rhs);
    }
    // spot values from the table
    CHECK(coeff_c(coeff_r(KPlusCoefficient::beta(1))) == KPlusCoefficient::zero());
    CHECK(coeff_c(coeff_r(KPlusCoefficient::beta(2))) == KPlusCoefficient::beta(2, 2));
}

TEST_CASE("projection formula r(x c(y)) = r(x) y") {
    for (const auto& x : kplus_basis())
        for (const auto& y : kr_basis(0)) {
            KRCoefficient lhs = coeff_r(x * coeff_c(y));
            KRCoefficient rhs = coeff_r(x) * y;
            CHECK(bott_collapse(lhs) == bott_collapse(rhs));
        }
    // no wraparound: exact equality
    CHECK(coeff_r(KPlusCoefficient::beta(1) * coeff_c(KRCoefficient::unit())) ==
          coeff_r(KPlusCoefficient::beta(1)) * KRCoefficient::unit());
    CHECK(coeff_r(KPlusCoefficient::beta(0) * coeff_c(KRCoefficient::mu())) ==
          coeff_r(KPlusCoefficient::beta(2, 2)));
}

TEST_CASE("rendering grammar") {
    KRCoefficient x = KRCoefficient::unit(3) + KRCoefficient::eta2() + KRCoefficient::mu(2, 1);
    CHECK(x.render() == "3 + η² + 2μ·b");
    CHECK(KRCoefficient::zero().render() == "0");
    CHECK(KRCoefficient::unit().render() == "1");
    CHECK(KRCoefficient::eta().render() == "η");
    CHECK((KRCoefficient::unit(-2) + KRCoefficient::mu()).render() == "-2 + μ");
    CHECK(KRCoefficient::unit(1, -1).render() == "b⁻¹");
    CHECK(KRCoefficient::unit(1, 2).render() == "b²");

    KPlusCoefficient p;
    p.c = {2, 0, -1, 0};
    CHECK(p.render() == "2 - β²");
    CHECK(KPlusCoefficient::beta(3).render() == "β³");
    CHECK(KPlusCoefficient::zero().render() == "0");
}

TEST_CASE("spin^c classifier") {
    CHECK(spin_c_classify(0, 4, 2, 2) == SpincClassification::OrientableNotSpinc);
    CHECK(spin_c_classify(0, 0, 0, 0) == SpincClassification::Spinc);
    CHECK(spin_c_classify(1, 0, 0, 1) == SpincClassification::NotOrientable);
    CHECK_THROWS_AS(spin_c_classify(1, 0, 1, 1), input_error);
    CHECK_THROWS_AS(spin_c_classify(-1, 1, 0, 0), input_error);

    // exhaustive up to total dimension 8: the rule depends only on
    // (p - q - (r - s)) mod 8
    for (int n = 0; n <= 8; ++n)
        for (int r = 0; r <= n; ++r)
            for (int p = 0; p <= n; ++p) {
                int s = n - r, q = n - p;
                long long m = (p - q) - (r - s);
                long long m8 = ((m % 8) + 8) % 8;
                SpincClassification expect = m8 == 0 ? SpincClassification::Spinc
                                             : m8 == 4 ? SpincClassification::OrientableNotSpinc
                                                       : SpincClassification::NotOrientable;
                CHECK(spin_c_classify(r, s, p, q) == expect);
                CHECK((m % 2) == 0);
            }
    CHECK(std::string(to_string(SpincClassification::Spinc)) == "Spinc");
}
