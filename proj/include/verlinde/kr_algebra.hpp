#pragma once

#include <array>
#include <map>
#include <string>

namespace verlinde {

// Element of KR_*(pt) = Z[eta, mu]/(2 eta, eta^3, mu eta, mu^2 - 4b), with the
// degree -8 Bott class b carried explicitly (and invertibly) so that every
// basis monomial b^m * {1, eta, eta^2, mu} is homogeneous of honest degree
// -8m - {0, 1, 2, 4}.
struct KRCoefficient {
    struct Component {
        long long one = 0;
        int eta = 0;  // mod 2
        int eta2 = 0; // mod 2
        long long mu = 0;

        bool trivial() const { return one == 0 && eta == 0 && eta2 == 0 && mu == 0; }
    };
    std::map<int, Component> comp; // Bott power -> component

    static KRCoefficient zero() { return {}; }
    static KRCoefficient unit(long long n = 1, int bott = 0);
    static KRCoefficient eta(int bott = 0);
    static KRCoefficient eta2(int bott = 0);
    static KRCoefficient mu(long long n = 1, int bott = 0);

    bool is_zero() const { return comp.empty(); }
    void normalize();

    friend KRCoefficient operator+(const KRCoefficient& a, const KRCoefficient& b);
    friend KRCoefficient operator-(const KRCoefficient& a, const KRCoefficient& b);
    friend KRCoefficient operator*(const KRCoefficient& a, const KRCoefficient& b);
    KRCoefficient& operator+=(const KRCoefficient& o) { return *this = *this + o; }
    friend bool operator==(const KRCoefficient& a, const KRCoefficient& b);
    friend bool operator!=(const KRCoefficient& a, const KRCoefficient& b) { return !(a == b); }

    // True when all terms share one degree mod 8 (or the element is 0);
    // reports that degree in [-7, 0].
    bool homogeneous_mod8(int& degree) const;

    // Deterministic textual form, e.g. "3 + eta^2 + 2mu*b" rendered with
    // UTF-8 eta/mu and superscripts; terms ordered by descending degree.
    std::string render() const;
};

// Element of K^*(+) = Z[beta]/(beta^4 - 1), graded by deg(beta^i) = -2i mod 8.
struct KPlusCoefficient {
    std::array<long long, 4> c{0, 0, 0, 0};

    static KPlusCoefficient zero() { return {}; }
    static KPlusCoefficient beta(int i, long long n = 1);

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    friend KPlusCoefficient operator+(const KPlusCoefficient& a, const KPlusCoefficient& b);
    friend KPlusCoefficient operator-(const KPlusCoefficient& a, const KPlusCoefficient& b);
    friend KPlusCoefficient operator*(const KPlusCoefficient& a, const KPlusCoefficient& b);
    KPlusCoefficient& operator+=(const KPlusCoefficient& o) { return *this = *this + o; }
    friend bool operator==(const KPlusCoefficient& a, const KPlusCoefficient& b) { return a.c == b.c; }
    friend bool operator!=(const KPlusCoefficient& a, const KPlusCoefficient& b) { return !(a == b); }

    std::string render() const;
};

// Conjugation on K^*(+): the Bott class is negated in each odd beta-degree,
// conj(beta^i) = (-1)^i beta^i.
KPlusCoefficient kplus_conj(const KPlusCoefficient& x);

// Multiply by beta^s (cyclic degree shift).
KPlusCoefficient kplus_shift(const KPlusCoefficient& x, int s);

// Forgetful map c: KR_*(pt) -> K_*(+); c(1)=1, c(eta)=0, c(mu)=2 beta^2,
// c(b)=1 (the mod-8 collapse on the complex side).
KPlusCoefficient coeff_c(const KRCoefficient& x);

// Realification r: K_*(+) -> KR_*(pt); r(1)=2, r(beta)=eta^2, r(beta^2)=mu,
// r(beta^3)=0, landing at Bott level 0.
KRCoefficient coeff_r(const KPlusCoefficient& y);

// The fully 8-periodic quotient (b = 1): the presentation the identities
// rc = 2 and r(x c(y)) = r(x) y close under when a beta power wraps past
// beta^3.
KRCoefficient bott_collapse(const KRCoefficient& x);

enum class SpincClassification { NotOrientable, OrientableNotSpinc, Spinc };

const char* to_string(SpincClassification c);

// Mod-8 rule for R^{r,s} with a type-(p,q) Real structure: the class of
// p - q - (r - s) mod 8 decides orientability and Spin^c-ability.
SpincClassification spin_c_classify(long long r, long long s, long long p, long long q);

} // namespace verlinde
