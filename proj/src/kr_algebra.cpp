#include "verlinde/kr_algebra.hpp"

#include "verlinde/errors.hpp"

#include <sstream>
#include <vector>

namespace verlinde {

namespace {

int mod2(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

std::string bott_suffix(int m) {
    if (m == 0) return "";
    if (m == 1) return "b";
    std::string s = "b";
    std::string power = std::to_string(m < 0 ? -m : m);
    static const char* sup[10] = {"⁰", "¹", "²", "³", "⁴",
                                  "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out = s;
    if (m < 0) out += "⁻"; // superscript minus
    if (m == -1) return out + "¹";
    for (char ch : power) out += sup[ch - '0'];
    return out;
}

} // namespace

KRCoefficient KRCoefficient::unit(long long n, int bott) {
    KRCoefficient x;
    if (n) x.comp[bott].one = n;
    return x;
}

KRCoefficient KRCoefficient::eta(int bott) {
    KRCoefficient x;
    x.comp[bott].eta = 1;
    return x;
}

KRCoefficient KRCoefficient::eta2(int bott) {
    KRCoefficient x;
    x.comp[bott].eta2 = 1;
    return x;
}

KRCoefficient KRCoefficient::mu(long long n, int bott) {
    KRCoefficient x;
    if (n) x.comp[bott].mu = n;
    return x;
}

void KRCoefficient::normalize() {
    for (auto it = comp.begin(); it != comp.end();) {
        it->second.eta = mod2(it->second.eta);
        it->second.eta2 = mod2(it->second.eta2);
        it = it->second.trivial() ? comp.erase(it) : std::next(it);
    }
}

KRCoefficient operator+(const KRCoefficient& a, const KRCoefficient& b) {
    KRCoefficient out = a;
    for (const auto& [m, c] : b.comp) {
        auto& t = out.comp[m];
        t.one += c.one;
        t.eta += c.eta;
        t.eta2 += c.eta2;
        t.mu += c.mu;
    }
    out.normalize();
    return out;
}

KRCoefficient operator-(const KRCoefficient& a, const KRCoefficient& b) {
    KRCoefficient neg;
    for (const auto& [m, c] : b.comp) {
        auto& t = neg.comp[m];
        t.one = -c.one;
        t.eta = c.eta; // 2-torsion
        t.eta2 = c.eta2;
        t.mu = -c.mu;
    }
    return a + neg;
}

KRCoefficient operator*(const KRCoefficient& a, const KRCoefficient& b) {
    KRCoefficient out;
    for (const auto& [m, x] : a.comp) {
        for (const auto& [n, y] : b.comp) {
            auto& t = out.comp[m + n];
            // relations: 2 eta = 0, eta^3 = 0, mu eta = 0, mu^2 = 4 b
            t.one += x.one * y.one;
            t.eta += mod2(x.one) * y.eta + x.eta * mod2(y.one);
            t.eta2 += mod2(x.one) * y.eta2 + x.eta2 * mod2(y.one) + x.eta * y.eta;
            t.mu += x.one * y.mu + x.mu * y.one;
            out.comp[m + n + 1].one += 4 * x.mu * y.mu;
        }
    }
    out.normalize();
    return out;
}

bool operator==(const KRCoefficient& a, const KRCoefficient& b) {
    KRCoefficient x = a, y = b;
    x.normalize();
    y.normalize();
    if (x.comp.size() != y.comp.size()) return false;
    auto it = x.comp.begin();
    auto jt = y.comp.begin();
    for (; it != x.comp.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        const auto& p = it->second;
        const auto& q = jt->second;
        if (p.one != q.one || p.eta != q.eta || p.eta2 != q.eta2 || p.mu != q.mu) return false;
    }
    return true;
}

bool KRCoefficient::homogeneous_mod8(int& degree) const {
    bool found = false;
    int deg = 0;
    auto consider = [&](int d, bool present) {
        if (!present) return true;
        int dm = ((d % 8) - 8) % 8; // representative in (-8, 0]
        if (dm == -8) dm = 0;
        if (!found) {
            deg = dm;
            found = true;
            return true;
        }
        return deg == dm;
    };
    for (const auto& [m, c] : comp) {
        if (!consider(-8 * m, c.one != 0)) return false;
        if (!consider(-8 * m - 1, c.eta != 0)) return false;
        if (!consider(-8 * m - 2, c.eta2 != 0)) return false;
        if (!consider(-8 * m - 4, c.mu != 0)) return false;
    }
    degree = found ? deg : 0;
    return true;
}

std::string KRCoefficient::render() const {
    // collect (degree, text) and order by descending degree
    struct Term {
        int degree;
        long long coeff;
        std::string basis; // "", eta, eta^2, mu
        int bott;
    };
    std::vector<Term> terms;
    for (const auto& [m, c] : comp) {
        if (c.one) terms.push_back({-8 * m, c.one, "", m});
        if (c.eta) terms.push_back({-8 * m - 1, 1, "η", m});
        if (c.eta2) terms.push_back({-8 * m - 2, 1, "η²", m});
        if (c.mu) terms.push_back({-8 * m - 4, c.mu, "μ", m});
    }
    if (terms.empty()) return "0";
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.degree > b.degree; });
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        long long mag = t.coeff < 0 ? -t.coeff : t.coeff;
        if (first) {
            if (t.coeff < 0) out += "-";
            first = false;
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        std::string body;
        bool unit_coeff = mag == 1 && (!t.basis.empty() || t.bott != 0);
        if (!unit_coeff) body += std::to_string(mag);
        if (!t.basis.empty()) body += t.basis;
        std::string bs = bott_suffix(t.bott);
        if (!bs.empty()) {
            if (!body.empty()) body += "·";
            body += bs;
        }
        if (body.empty()) body = std::to_string(mag);
        out += body;
    }
    return out;
}

KPlusCoefficient KPlusCoefficient::beta(int i, long long n) {
    KPlusCoefficient x;
    x.c[((i % 4) + 4) % 4] = n;
    return x;
}

KPlusCoefficient operator+(const KPlusCoefficient& a, const KPlusCoefficient& b) {
    KPlusCoefficient out;
    for (int i = 0; i < 4; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

KPlusCoefficient operator-(const KPlusCoefficient& a, const KPlusCoefficient& b) {
    KPlusCoefficient out;
    for (int i = 0; i < 4; ++i) out.c[i] = a.c[i] - b.c[i];
    return out;
}

KPlusCoefficient operator*(const KPlusCoefficient& a, const KPlusCoefficient& b) {
    KPlusCoefficient out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.c[(i + j) % 4] += a.c[i] * b.c[j];
    return out;
}

std::string KPlusCoefficient::render() const {
    static const char* basis[4] = {"", "β", "β²", "β³"};
    std::string out;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (!c[i]) continue;
        long long mag = c[i] < 0 ? -c[i] : c[i];
        if (first) {
            if (c[i] < 0) out += "-";
            first = false;
        } else {
            out += c[i] < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += std::to_string(mag);
        out += basis[i];
    }
    return out.empty() ? "0" : out;
}

KPlusCoefficient kplus_conj(const KPlusCoefficient& x) {
    KPlusCoefficient out = x;
    out.c[1] = -out.c[1];
    out.c[3] = -out.c[3];
    return out;
}

KPlusCoefficient kplus_shift(const KPlusCoefficient& x, int s) {
    KPlusCoefficient out;
    s = ((s % 4) + 4) % 4;
    for (int i = 0; i < 4; ++i) out.c[(i + s) % 4] = x.c[i];
    return out;
}

KPlusCoefficient coeff_c(const KRCoefficient& x) {
    KPlusCoefficient out;
    for (const auto& [m, c] : x.comp) {
        (void)m;
        out.c[0] += c.one;
        out.c[2] += 2 * c.mu;
    }
    return out;
}

KRCoefficient coeff_r(const KPlusCoefficient& y) {
    KRCoefficient out;
    auto& t = out.comp[0];
    t.one = 2 * y.c[0];
    t.eta2 = mod2(y.c[1]);
    t.mu = y.c[2];
    out.normalize();
    return out;
}

KRCoefficient bott_collapse(const KRCoefficient& x) {
    KRCoefficient out;
    auto& t = out.comp[0];
    for (const auto& [m, c] : x.comp) {
        (void)m;
        t.one += c.one;
        t.eta += c.eta;
        t.eta2 += c.eta2;
        t.mu += c.mu;
    }
    out.normalize();
    return out;
}

const char* to_string(SpincClassification c) {
    switch (c) {
    case SpincClassification::NotOrientable: return "NotOrientable";
    case SpincClassification::OrientableNotSpinc: return "OrientableNotSpinc";
    case SpincClassification::Spinc: return "Spinc";
    }
    return "?";
}

SpincClassification spin_c_classify(long long r, long long s, long long p, long long q) {
    if (r < 0 || s < 0 || p < 0 || q < 0) throw input_error("spin_c_classify: negative argument");
    if (p + q != r + s) throw input_error("spin_c_classify: requires p + q = r + s");
    long long m = (p - q) - (r - s); // always even when p+q = r+s
    long long m8 = ((m % 8) + 8) % 8;
    if (m8 == 0) return SpincClassification::Spinc;
    if (m8 == 4) return SpincClassification::OrientableNotSpinc;
    return SpincClassification::NotOrientable;
}

} // namespace verlinde
