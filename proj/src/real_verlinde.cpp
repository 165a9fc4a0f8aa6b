#include "verlinde/real_verlinde.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace verlinde {

namespace {

std::map<Weight, long long> fusion_lookup(const FusionTable& t, const Weight& a, const Weight& b) {
    int ia = t.weights.index_of(a);
    int ib = t.weights.index_of(b);
    if (ia < 0 || ib < 0) throw input_error("multiply: weight outside the level-k alcove");
    std::map<Weight, long long> out;
    for (const auto& [n, c] : t.get(ia, ib)) out[t.weights.weights[n]] = c;
    return out;
}

int beta_shift_of(const RealInvolutionDatum& inv, const Weight& fixed_weight) {
    // c(V'_lambda) sits at beta^0 for real type and beta^2 for quaternionic
    return epsilon_of(inv, fixed_weight) < 0 ? 2 : 0;
}

KPlusCoefficient kplus_scale(const KPlusCoefficient& x, long long n) {
    KPlusCoefficient out = x;
    for (auto& v : out.c) v *= n;
    return out;
}

// Accumulate r(V_gamma tensor t) in canonical form.
void fold_r_term(RKRElement& res, const RealInvolutionDatum& inv, const Weight& gamma,
                 const KPlusCoefficient& t) {
    if (t.is_zero()) return;
    Weight img = apply_sigma_plus(inv, gamma);
    if (img == gamma) {
        // r(V_gamma beta^i) = V'_gamma * r(beta^{i - shift})
        res.fixed[gamma] += coeff_r(kplus_shift(t, beta_shift_of(inv, gamma)));
    } else if (gamma < img) {
        res.orbit[gamma] += t;
    } else {
        res.orbit[img] += kplus_conj(t);
    }
}

// Fixed x Fixed generator product, scaled by the KR coefficient W.
void accumulate_fixed_fixed(RKRElement& res, const RealInvolutionDatum& inv,
                            const FusionTable& table, const Weight& lam, const Weight& gam,
                            const KRCoefficient& W) {
    const int d_lam = epsilon_of(inv, lam) < 0 ? -4 : 0;
    const int d_gam = epsilon_of(inv, gam) < 0 ? -4 : 0;
    const int D = d_lam + d_gam; // 0, -4 or -8
    const KPlusCoefficient cW = coeff_c(W);

    auto constituents = fusion_lookup(table, lam, gam);
    for (const auto& [nu, c] : constituents) {
        Weight img = apply_sigma_plus(inv, nu);
        if (img == nu) {
            int d_nu = epsilon_of(inv, nu) < 0 ? -4 : 0;
            if (((d_nu - D) % 8 + 8) % 8 == 0) {
                int bott = (d_nu - D) / 8;
                res.fixed[nu] += KRCoefficient::unit(c, bott) * W;
            } else {
                if (c % 2 != 0) {
                    std::ostringstream os;
                    os << "product " << weight_to_string(lam) << "*" << weight_to_string(gam)
                       << ": constituent " << weight_to_string(nu) << " needs half of odd coefficient "
                       << c;
                    throw evenness_violation(os.str());
                }
                int bott = (d_nu - 4 - D) / 8;
                res.fixed[nu] += KRCoefficient::mu(c / 2, bott) * W;
            }
        } else {
            auto it = constituents.find(img);
            long long c2 = it == constituents.end() ? 0 : it->second;
            if (c2 != c)
                throw numeric_error("fusion is not sigma-equivariant on a fixed product (internal)");
            if (img < nu) continue; // the pair is handled at its canonical member
            int p = ((-D / 2) % 4 + 4) % 4;
            res.orbit[nu] += kplus_scale(kplus_shift(cW, p), c);
        }
    }
}

void accumulate_fixed_orbit(RKRElement& res, const RealInvolutionDatum& inv,
                            const FusionTable& table, const Weight& lam, const KRCoefficient& w,
                            const Weight& nu, const KPlusCoefficient& p) {
    // V'_lambda w * r(V_nu p) = r(c(V'_lambda w) V_nu p)
    KPlusCoefficient t = kplus_shift(coeff_c(w) * p, beta_shift_of(inv, lam));
    if (t.is_zero()) return;
    for (const auto& [gamma, c] : fusion_lookup(table, lam, nu))
        fold_r_term(res, inv, gamma, kplus_scale(t, c));
}

void accumulate_orbit_orbit(RKRElement& res, const RealInvolutionDatum& inv,
                            const FusionTable& table, const Weight& nu1, const KPlusCoefficient& p,
                            const Weight& nu2, const KPlusCoefficient& q) {
    // r(x) r(y) = r(x y) + r(x sigma(y))
    KPlusCoefficient pq = p * q;
    if (!pq.is_zero())
        for (const auto& [gamma, c] : fusion_lookup(table, nu1, nu2))
            fold_r_term(res, inv, gamma, kplus_scale(pq, c));
    KPlusCoefficient pq2 = p * kplus_conj(q);
    if (!pq2.is_zero())
        for (const auto& [gamma, c] : fusion_lookup(table, nu1, apply_sigma_plus(inv, nu2)))
            fold_r_term(res, inv, gamma, kplus_scale(pq2, c));
}

} // namespace

void RKRElement::normalize() {
    for (auto it = fixed.begin(); it != fixed.end();) {
        it->second.normalize();
        it = it->second.is_zero() ? fixed.erase(it) : std::next(it);
    }
    for (auto it = orbit.begin(); it != orbit.end();)
        it = it->second.is_zero() ? orbit.erase(it) : std::next(it);
}

bool operator==(const RKRElement& a, const RKRElement& b) {
    RKRElement x = a, y = b;
    x.normalize();
    y.normalize();
    return x.fixed == y.fixed && x.orbit == y.orbit;
}

std::string RKRElement::render() const {
    RKRElement c = *this;
    c.normalize();
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out += " + ";
        first = false;
    };
    for (const auto& [w, coeff] : c.fixed) {
        sep();
        out += "V'" + weight_to_string(w);
        if (coeff != KRCoefficient::unit()) out += "⊗(" + coeff.render() + ")";
    }
    for (const auto& [w, coeff] : c.orbit) {
        sep();
        out += "r(V" + weight_to_string(w);
        if (coeff != KPlusCoefficient::beta(0)) out += "⊗(" + coeff.render() + ")";
        out += ")";
    }
    return out;
}

RKRElement rkr_fixed(const Weight& lambda, const KRCoefficient& coeff) {
    RKRElement x;
    x.fixed[lambda] = coeff;
    x.normalize();
    return x;
}

RKRElement rkr_orbit(const RealInvolutionDatum& inv, const Weight& nu, const KPlusCoefficient& coeff) {
    Weight img = apply_sigma_plus(inv, nu);
    if (img == nu) throw input_error("rkr_orbit: weight is sigma-fixed");
    RKRElement x;
    if (nu < img)
        x.orbit[nu] = coeff;
    else
        x.orbit[img] = kplus_conj(coeff);
    x.normalize();
    return x;
}

RKRElement rkr_realify(const RealInvolutionDatum& inv,
                       const std::map<Weight, KPlusCoefficient>& character) {
    RKRElement out;
    for (const auto& [w, p] : character) fold_r_term(out, inv, w, p);
    out.normalize();
    return out;
}

std::vector<RealBasisElement> real_basis(const RootDatum& rd, const RealInvolutionDatum& inv, int k) {
    auto checks = validate(inv, rd, 0);
    if (!all_passed(checks)) {
        for (const auto& c : checks)
            if (!c.passed) throw input_error("invalid involution datum: " + c.name + " " + c.detail);
    }
    TypeDecomposition dec = classify(inv, level_weights(rd, k));
    std::vector<RealBasisElement> out;
    std::vector<Weight> fixed;
    fixed.insert(fixed.end(), dec.fixed_real.begin(), dec.fixed_real.end());
    fixed.insert(fixed.end(), dec.fixed_quaternionic.begin(), dec.fixed_quaternionic.end());
    std::sort(fixed.begin(), fixed.end());
    for (const auto& w : fixed) {
        int eps = epsilon_of(inv, w);
        out.push_back({RealBasisElement::Kind::Fixed, w, eps, {}, eps > 0 ? 0 : -4});
    }
    for (const auto& [rep, partner] : dec.orbit_pairs)
        out.push_back({RealBasisElement::Kind::OrbitPair, rep, 0, partner, 0});
    return out;
}

long long rr_k_rank(const RootDatum& rd, const RealInvolutionDatum& inv, int k) {
    TypeDecomposition dec = classify(inv, level_weights(rd, k));
    return static_cast<long long>(dec.fixed_real.size() + dec.fixed_quaternionic.size() +
                                  dec.orbit_pairs.size());
}

RKRElement multiply(const RKRElement& x, const RKRElement& y, const FusionTable& table,
                    const RealInvolutionDatum& inv) {
    RKRElement res;
    for (const auto& [lam, w] : x.fixed) {
        if (!is_sigma_fixed(inv, lam)) throw input_error("multiply: fixed part keyed by a moved weight");
        for (const auto& [gam, u] : y.fixed) {
            KRCoefficient W = w * u;
            if (!W.is_zero()) accumulate_fixed_fixed(res, inv, table, lam, gam, W);
        }
        for (const auto& [nu, q] : y.orbit) accumulate_fixed_orbit(res, inv, table, lam, w, nu, q);
    }
    for (const auto& [nu, p] : x.orbit) {
        for (const auto& [gam, u] : y.fixed) accumulate_fixed_orbit(res, inv, table, gam, u, nu, p);
        for (const auto& [nu2, q] : y.orbit) accumulate_orbit_orbit(res, inv, table, nu, p, nu2, q);
    }
    res.normalize();
    return res;
}

std::map<Weight, KPlusCoefficient> forgetful_image(const RKRElement& x, const RealInvolutionDatum& inv) {
    std::map<Weight, KPlusCoefficient> out;
    for (const auto& [lam, w] : x.fixed)
        out[lam] += kplus_shift(coeff_c(w), beta_shift_of(inv, lam));
    for (const auto& [nu, p] : x.orbit) {
        out[nu] += p;
        out[apply_sigma_plus(inv, nu)] += kplus_conj(p);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<Weight, KPlusCoefficient> forgetful_product(const std::map<Weight, KPlusCoefficient>& a,
                                                     const std::map<Weight, KPlusCoefficient>& b,
                                                     const FusionTable& table) {
    std::map<Weight, KPlusCoefficient> out;
    for (const auto& [w1, p] : a)
        for (const auto& [w2, q] : b) {
            KPlusCoefficient pq = p * q;
            if (pq.is_zero()) continue;
            for (const auto& [nu, c] : fusion_lookup(table, w1, w2)) out[nu] += kplus_scale(pq, c);
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<std::vector<int>> enumerate_S(const RootDatum& rd, const RealInvolutionDatum& inv) {
    std::vector<int> moved;
    for (int i = 0; i < rd.rank; ++i)
        if (inv.sigma[i] != i) moved.push_back(i);
    if (moved.size() > 20) throw resource_error("enumerate_S: too many moved indices");
    std::vector<std::vector<int>> out;
    out.push_back({}); // the unit monomial
    const int n = static_cast<int>(moved.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::set<int> d, sd;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) {
                d.insert(moved[b]);
                sd.insert(inv.sigma[moved[b]]);
            }
        bool disjoint = true;
        for (int i : d)
            if (sd.count(i)) {
                disjoint = false;
                break;
            }
        if (disjoint) out.push_back(std::vector<int>(d.begin(), d.end()));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

VirtualCharacter monomial_character(const RootDatum& rd, const VirtualCharacter& base,
                                    const std::vector<int>& monomial) {
    VirtualCharacter acc = base;
    for (int idx : monomial) {
        Weight omega(rd.rank, 0);
        omega[idx] = 1;
        acc = virtual_character_product(rd, acc, VirtualCharacter{{omega, 1}});
    }
    return acc;
}

VirtualCharacter vc_add(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter out = a;
    for (const auto& [w, c] : b) {
        out[w] += c;
        if (out[w] == 0) out.erase(w);
    }
    return out;
}

} // namespace

std::vector<RealIdealGenerator> real_ideal_generators(const std::vector<VirtualCharacter>& ik_gens,
                                                      const RealInvolutionDatum& inv,
                                                      const RootDatum& rd, int k) {
    for (const auto& rho : ik_gens)
        if (!in_verlinde_ideal(rd, k, rho))
            throw input_error("real_ideal_generators: a supplied generator fails the vanishing gate");

    std::vector<RealIdealGenerator> out;
    std::vector<std::vector<int>> S; // computed lazily, only needed for unstable generators
    bool have_S = false;
    for (const auto& rho : ik_gens) {
        if (sigma_bar(inv, rho) == rho) {
            RealIdealGenerator g;
            g.kind = RealIdealGenerator::Kind::CInv;
            g.rho = rho;
            g.payload = rho;
            out.push_back(std::move(g));
            continue;
        }
        if (!have_S) {
            S = enumerate_S(rd, inv);
            have_S = true;
        }
        for (const auto& tau : S) {
            RealIdealGenerator g;
            g.kind = RealIdealGenerator::Kind::CInvPair;
            g.rho = rho;
            g.monomial = tau;
            VirtualCharacter rt = monomial_character(rd, rho, tau);
            g.payload = vc_add(rt, sigma_bar(inv, rt));
            if (!in_verlinde_ideal(rd, k, g.payload))
                throw numeric_error("real_ideal_generators: paired payload escapes the ideal (internal)");
            out.push_back(std::move(g));
        }
        for (const auto& chi : S) {
            VirtualCharacter rc = monomial_character(rd, rho, chi);
            if (!in_verlinde_ideal(rd, k, rc))
                throw numeric_error("real_ideal_generators: r-payload escapes the ideal (internal)");
            for (int i : {1, 3}) {
                RealIdealGenerator g;
                g.kind = RealIdealGenerator::Kind::RGen;
                g.rho = rho;
                g.monomial = chi;
                g.beta_power = i;
                g.payload = rc;
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

std::vector<VirtualCharacter> builtin_ik_generators(const RootDatum& rd, int k) {
    if (rd.type.family != 'A')
        throw input_error("builtin Verlinde-ideal generators exist only for type A; "
                          "supply generators for other types");
    std::vector<VirtualCharacter> out;
    const int l = rd.rank;
    for (int i = 0; i < l; ++i) {
        // (k+1) L_1 + L_2 + ... + L_{i+1} in standard-weight coordinates
        std::vector<int> a(l + 1, 0);
        a[0] = k + 1;
        for (int t = 1; t <= i; ++t) a[t] = 1;
        Weight w(l);
        for (int t = 0; t < l; ++t) w[t] = a[t] - a[t + 1];
        out.push_back(VirtualCharacter{{w, 1}});
    }
    return out;
}

ModuleReport verify_module_structure(const RootDatum& rd, const RealInvolutionDatum& inv, int k) {
    ModuleReport rep;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, detail});
    };

    FusionTable table = build_fusion_table(rd, k);
    auto basis = real_basis(rd, inv, k);
    TypeDecomposition dec = classify(inv, table.weights);

    // (a) the forgetful images of the degree-0/-4 generators are exactly the
    // invariant sublattice basis {V_lambda fixed} union {V_nu + V_sigma(nu)}
    bool span_ok = true;
    std::string span_detail;
    for (const auto& b : basis) {
        RKRElement gen = b.kind == RealBasisElement::Kind::Fixed ? rkr_fixed(b.weight)
                                                                 : rkr_orbit(inv, b.weight);
        auto img = forgetful_image(gen, inv);
        std::map<Weight, KPlusCoefficient> expect;
        if (b.kind == RealBasisElement::Kind::Fixed) {
            expect[b.weight] = KPlusCoefficient::beta(b.epsilon < 0 ? 2 : 0);
        } else {
            expect[b.weight] = KPlusCoefficient::beta(0);
            expect[b.partner] = KPlusCoefficient::beta(0);
        }
        if (img != expect) {
            span_ok = false;
            span_detail = "unexpected forgetful image of a generator";
        }
    }
    add("forgetful_span", span_ok, span_detail);

    // (b) closure: all pairwise generator products stay inside the module
    bool closure_ok = true;
    std::string closure_detail;
    try {
        for (const auto& b1 : basis) {
            RKRElement g1 = b1.kind == RealBasisElement::Kind::Fixed ? rkr_fixed(b1.weight)
                                                                     : rkr_orbit(inv, b1.weight);
            for (const auto& b2 : basis) {
                RKRElement g2 = b2.kind == RealBasisElement::Kind::Fixed ? rkr_fixed(b2.weight)
                                                                         : rkr_orbit(inv, b2.weight);
                RKRElement prod = multiply(g1, g2, table, inv);
                for (const auto& [w, coeff] : prod.fixed) {
                    (void)coeff;
                    if (!is_sigma_fixed(inv, w)) closure_ok = false;
                }
                for (const auto& [w, coeff] : prod.orbit) {
                    (void)coeff;
                    if (canonical_orbit_representative(inv, w) != w) closure_ok = false;
                }
            }
        }
    } catch (const std::exception& e) {
        closure_ok = false;
        closure_detail = e.what();
    }
    add("product_closure", closure_ok, closure_detail);

    // (c) rank formula
    long long rank = rr_k_rank(rd, inv, k);
    long long expect_rank = static_cast<long long>(dec.fixed_real.size() +
                                                   dec.fixed_quaternionic.size() +
                                                   dec.orbit_pairs.size());
    bool rank_ok = rank == expect_rank &&
                   dec.fixed_real.size() + dec.fixed_quaternionic.size() + 2 * dec.orbit_pairs.size() ==
                       table.weights.weights.size();
    add("rank_formula", rank_ok, "");

    rep.passed = all_passed(rep.checks);
    return rep;
}

} // namespace verlinde
