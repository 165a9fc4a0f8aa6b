#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/errors.hpp"
#include "verlinde/real_verlinde.hpp"

#include <random>
#include <set>

using namespace verlinde;

namespace {

RootDatum datum(char f, int r) { return build_root_datum(CartanType{f, r}); }

struct Setup {
    RootDatum rd;
    RealInvolutionDatum inv;
    FusionTable table;
};

Setup make(char f, int r, const std::string& preset_name, int k) {
    RootDatum rd = datum(f, r);
    RealInvolutionDatum inv = preset(rd, preset_name);
    FusionTable table = build_fusion_table(rd, k);
    return {std::move(rd), std::move(inv), std::move(table)};
}

// Module generators including the beta shifts of the orbit generators.
std::vector<RKRElement> generator_set(const Setup& s, int k) {
    std::vector<RKRElement> out;
    for (const auto& b : real_basis(s.rd, s.inv, k)) {
        if (b.kind == RealBasisElement::Kind::Fixed) {
            out.push_back(rkr_fixed(b.weight));
        } else {
            for (int i = 0; i < 4; ++i)
                out.push_back(rkr_orbit(s.inv, b.weight, KPlusCoefficient::beta(i)));
        }
    }
    return out;
}

// Degrees (mod 8, in (-8,0]) of all terms of an element.
std::set<int> degrees_mod8(const RKRElement& x, const RealInvolutionDatum& inv) {
    std::set<int> out;
    auto norm8 = [](int d) { return -(((-d) % 8 + 8) % 8); };
    for (const auto& [w, coeff] : x.fixed) {
        int intrinsic = epsilon_of(inv, w) < 0 ? -4 : 0;
        for (const auto& [m, c] : coeff.comp) {
            if (c.one) out.insert(norm8(intrinsic - 8 * m));
            if (c.eta) out.insert(norm8(intrinsic - 8 * m - 1));
            if (c.eta2) out.insert(norm8(intrinsic - 8 * m - 2));
            if (c.mu) out.insert(norm8(intrinsic - 8 * m - 4));
        }
    }
    for (const auto& [w, coeff] : x.orbit) {
        (void)w;
        for (int i = 0; i < 4; ++i)
            if (coeff.c[i]) out.insert(norm8(-2 * i));
    }
    return out;
}

} // namespace

TEST_CASE("real basis and rank") {
    {
        Setup s = make('A', 1, "trivial_involution", 1);
        auto basis = real_basis(s.rd, s.inv, 1);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0].weight == Weight{0});
        CHECK(basis[0].epsilon == 1);
        CHECK(basis[0].degree == 0);
        CHECK(basis[1].weight == Weight{1});
        CHECK(basis[1].epsilon == -1);
        CHECK(basis[1].degree == -4);
        CHECK(rr_k_rank(s.rd, s.inv, 2) == 3);
        CHECK(rr_k_rank(s.rd, s.inv, 0) == 1);
    }
    {
        Setup s = make('A', 2, "trivial_involution", 1);
        auto basis = real_basis(s.rd, s.inv, 1);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0].kind == RealBasisElement::Kind::Fixed);
        CHECK(basis[0].weight == Weight{0, 0});
        CHECK(basis[1].kind == RealBasisElement::Kind::OrbitPair);
        CHECK(basis[1].weight == Weight{0, 1});
        CHECK(basis[1].partner == Weight{1, 0});
        CHECK(rr_k_rank(s.rd, s.inv, 1) == 2);
    }
    {
        // SU(4) with the quaternionic involution at level 1: 0 and omega_2 real (degree 0),
        // omega_1 and omega_3 quaternionic (degree -4)
        Setup s = make('A', 3, "su_even_quaternionic", 1);
        auto basis = real_basis(s.rd, s.inv, 1);
        REQUIRE(basis.size() == 4);
        CHECK(basis[0].weight == Weight{0, 0, 0});
        CHECK(basis[0].degree == 0);
        CHECK(basis[1].weight == Weight{0, 0, 1});
        CHECK(basis[1].degree == -4);
        CHECK(basis[2].weight == Weight{0, 1, 0});
        CHECK(basis[2].degree == 0);
        CHECK(basis[3].weight == Weight{1, 0, 0});
        CHECK(basis[3].degree == -4);
    }
}

TEST_CASE("unit element and eta annihilation") {
    Setup s = make('A', 2, "trivial_involution", 2);
    RKRElement unit = rkr_fixed(Weight{0, 0});
    std::vector<RKRElement> samples = {
        rkr_fixed(Weight{1, 1}),
        rkr_orbit(s.inv, Weight{0, 1}),
        rkr_orbit(s.inv, Weight{0, 2}, KPlusCoefficient::beta(3)),
        rkr_fixed(Weight{1, 1}, KRCoefficient::mu() + KRCoefficient::eta()),
    };
    for (const auto& x : samples) {
        CHECK(multiply(unit, x, s.table, s.inv) == x);
        CHECK(multiply(x, unit, s.table, s.inv) == x);
    }
    // orbit part times eta dies: r(x) eta = r(x c(eta)) = 0
    RKRElement eta_unit = rkr_fixed(Weight{0, 0}, KRCoefficient::eta());
    CHECK(multiply(rkr_orbit(s.inv, Weight{0, 1}), eta_unit, s.table, s.inv).is_zero());
    // fixed part keeps its eta
    RKRElement fe = multiply(rkr_fixed(Weight{1, 1}), eta_unit, s.table, s.inv);
    CHECK(fe == rkr_fixed(Weight{1, 1}, KRCoefficient::eta()));
}

TEST_CASE("SU(2): quaternionic squares acquire the Bott class") {
    Setup s = make('A', 1, "trivial_involution", 2);
    RKRElement prod = multiply(rkr_fixed(Weight{1}), rkr_fixed(Weight{1}), s.table, s.inv);
    RKRElement expect;
    expect.fixed[Weight{0}] = KRCoefficient::unit(1, 1);
    expect.fixed[Weight{2}] = KRCoefficient::unit(1, 1);
    CHECK(prod == expect);

    // real x quaternionic stays at degree -4 with no Bott factor
    RKRElement prod2 = multiply(rkr_fixed(Weight{2}), rkr_fixed(Weight{1}), s.table, s.inv);
    CHECK(prod2 == rkr_fixed(Weight{1}));
}

TEST_CASE("A2 orbit products close with the expected folding") {
    Setup s = make('A', 2, "trivial_involution", 1);
    RKRElement x = rkr_orbit(s.inv, Weight{0, 1});
    RKRElement prod = multiply(x, x, s.table, s.inv);
    RKRElement expect;
    expect.orbit[Weight{0, 1}] = KPlusCoefficient::beta(0);
    expect.fixed[Weight{0, 0}] = KRCoefficient::unit(2);
    CHECK(prod == expect);
    CHECK(forgetful_image(prod, s.inv) ==
          forgetful_product(forgetful_image(x, s.inv), forgetful_image(x, s.inv), s.table));
}

TEST_CASE("degree additivity mod 8 on homogeneous generators") {
    for (auto [f, r, pr, k] :
         {std::tuple<char, int, const char*, int>{'A', 1, "trivial_involution", 3},
          {'A', 2, "trivial_involution", 2},
          {'A', 3, "su_even_quaternionic", 2}}) {
        Setup s = make(f, r, pr, k);
        auto gens = generator_set(s, k);
        for (const auto& x : gens)
            for (const auto& y : gens) {
                auto dx = degrees_mod8(x, s.inv);
                auto dy = degrees_mod8(y, s.inv);
                REQUIRE(dx.size() == 1);
                REQUIRE(dy.size() == 1);
                RKRElement p = multiply(x, y, s.table, s.inv);
                auto dp = degrees_mod8(p, s.inv);
                int expect = -(((-(*dx.begin() + *dy.begin())) % 8 + 8) % 8);
                for (int d : dp) CHECK(d == expect);
            }
    }
}

TEST_CASE("forgetful commutation on all generator pairs") {
    // A5/trivial mixes all three types at k=2: real {.., adjoint}, the
    // quaternionic 20 = wedge^3 of the 6, and eight conjugate pairs
    for (auto [f, r, pr, k] :
         {std::tuple<char, int, const char*, int>{'A', 1, "trivial_involution", 4},
          {'A', 2, "trivial_involution", 2},
          {'A', 3, "su_even_quaternionic", 2},
          {'A', 3, "trivial_involution", 1},
          {'A', 5, "trivial_involution", 2},
          {'C', 2, "trivial_involution", 2}}) {
        Setup s = make(f, r, pr, k);
        auto gens = generator_set(s, k);
        for (const auto& x : gens)
            for (const auto& y : gens) {
                RKRElement p = multiply(x, y, s.table, s.inv);
                auto lhs = forgetful_image(p, s.inv);
                auto rhs = forgetful_product(forgetful_image(x, s.inv), forgetful_image(y, s.inv),
                                             s.table);
                CHECK(lhs == rhs);
                // commutativity
                CHECK(p == multiply(y, x, s.table, s.inv));
            }
    }
}

TEST_CASE("associativity on generator triples for SU(2)") {
    for (int k = 1; k <= 3; ++k) {
        Setup s = make('A', 1, "trivial_involution", k);
        auto gens = generator_set(s, k);
        for (const auto& x : gens)
            for (const auto& y : gens)
                for (const auto& z : gens) {
                    RKRElement a = multiply(multiply(x, y, s.table, s.inv), z, s.table, s.inv);
                    RKRElement b = multiply(x, multiply(y, z, s.table, s.inv), s.table, s.inv);
                    CHECK(a == b);
                }
    }
}

TEST_CASE("realified characters multiply as r(x) V' = r(x c(V'))") {
    Setup s = make('A', 2, "trivial_involution", 2);
    for (const Weight& nu : {Weight{0, 1}, Weight{0, 2}}) {
        for (const Weight& lam : {Weight{0, 0}, Weight{1, 1}}) {
            RKRElement lhs = multiply(rkr_orbit(s.inv, nu), rkr_fixed(lam), s.table, s.inv);
            // expected: canonical r of the fused character
            std::map<Weight, KPlusCoefficient> fused;
            for (const auto& [g, c] : fusion_coeffs(s.rd, 2, nu, lam))
                fused[g] = KPlusCoefficient::beta(0, c);
            CHECK(lhs == rkr_realify(s.inv, fused));
        }
    }
}

TEST_CASE("evenness violation fires only on inconsistent data") {
    RootDatum a2 = datum('A', 2);
    RealInvolutionDatum broken;
    broken.name = "not-from-an-involution";
    broken.sigma = {0, 1}; // identity: structurally fine
    broken.epsilon_from_coweight = true;
    broken.coweight = {1, 0}; // epsilon not a fusion grading
    CHECK(all_passed(validate(broken, a2, 2)));
    FusionTable t = build_fusion_table(a2, 1);
    CHECK_THROWS_AS(multiply(rkr_fixed(Weight{1, 0}), rkr_fixed(Weight{0, 1}), t, broken),
                    evenness_violation);
}

TEST_CASE("multiply rejects weights outside the table") {
    Setup s = make('A', 1, "trivial_involution", 1);
    CHECK_THROWS_AS(multiply(rkr_fixed(Weight{2}), rkr_fixed(Weight{1}), s.table, s.inv),
                    input_error);
}

TEST_CASE("non-canonical orbit keys multiply like their canonical form") {
    Setup s = make('A', 2, "trivial_involution", 2);
    // r(V_(1,0) beta) written directly on the non-canonical member
    RKRElement raw;
    raw.orbit[Weight{1, 0}] = KPlusCoefficient::beta(1);
    RKRElement canon = rkr_orbit(s.inv, Weight{1, 0}, KPlusCoefficient::beta(1));
    CHECK(forgetful_image(raw, s.inv) == forgetful_image(canon, s.inv));
    for (const RKRElement& y : {rkr_fixed(Weight{1, 1}), rkr_orbit(s.inv, Weight{0, 2})}) {
        CHECK(multiply(raw, y, s.table, s.inv) == multiply(canon, y, s.table, s.inv));
        CHECK(multiply(y, raw, s.table, s.inv) == multiply(y, canon, s.table, s.inv));
    }
}

TEST_CASE("square-free monomial sets") {
    RootDatum a1 = datum('A', 1);
    CHECK(enumerate_S(a1, preset(a1, "trivial_involution")) == std::vector<std::vector<int>>{{}});

    RootDatum a2 = datum('A', 2);
    CHECK(enumerate_S(a2, preset(a2, "trivial_involution")) ==
          std::vector<std::vector<int>>{{}, {0}, {1}});

    RootDatum a3 = datum('A', 3);
    CHECK(enumerate_S(a3, preset(a3, "su_even_quaternionic")) == std::vector<std::vector<int>>{{}});

    RootDatum a4 = datum('A', 4);
    auto S = enumerate_S(a4, preset(a4, "trivial_involution"));
    std::vector<std::vector<int>> expect = {{}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}};
    CHECK(S == expect);
}

TEST_CASE("built-in type A ideal generators") {
    RootDatum a1 = datum('A', 1);
    for (int k = 0; k <= 3; ++k) {
        auto gens = builtin_ik_generators(a1, k);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0] == VirtualCharacter{{Weight{k + 1}, 1}});
        CHECK(in_verlinde_ideal(a1, k, gens[0]));
    }
    RootDatum a3 = datum('A', 3);
    auto gens = builtin_ik_generators(a3, 1);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == VirtualCharacter{{Weight{2, 0, 0}, 1}});
    CHECK(gens[1] == VirtualCharacter{{Weight{1, 1, 0}, 1}});
    CHECK(gens[2] == VirtualCharacter{{Weight{1, 0, 1}, 1}});
    for (const auto& g : gens) CHECK(in_verlinde_ideal(a3, 1, g));
    CHECK_THROWS_AS(builtin_ik_generators(datum('C', 2), 1), input_error);
}

TEST_CASE("real ideal generators: stable generators stay singletons") {
    RootDatum a3 = datum('A', 3);
    RealInvolutionDatum inv = preset(a3, "su_even_quaternionic");
    for (int k = 1; k <= 2; ++k) {
        auto out = real_ideal_generators(builtin_ik_generators(a3, k), inv, a3, k);
        REQUIRE(out.size() == 3);
        for (const auto& g : out) {
            CHECK(g.kind == RealIdealGenerator::Kind::CInv);
            CHECK(g.payload == g.rho);
        }
    }
    CHECK(real_ideal_generators({}, inv, a3, 1).empty());
}

TEST_CASE("real ideal generators: unstable generators spawn pairs and r-terms") {
    RootDatum a2 = datum('A', 2);
    RealInvolutionDatum inv = preset(a2, "trivial_involution");
    VirtualCharacter rho{{Weight{2, 0}, 1}};
    REQUIRE(in_verlinde_ideal(a2, 1, rho));
    auto out = real_ideal_generators({rho}, inv, a2, 1);
    // S = {1, w1, w2}: 3 paired generators and 3*2 r-generators
    int pairs = 0, rgens = 0;
    for (const auto& g : out) {
        if (g.kind == RealIdealGenerator::Kind::CInvPair) {
            ++pairs;
            if (g.monomial.empty())
                CHECK(g.payload == VirtualCharacter{{Weight{2, 0}, 1}, {Weight{0, 2}, 1}});
        } else if (g.kind == RealIdealGenerator::Kind::RGen) {
            ++rgens;
            CHECK((g.beta_power == 1 || g.beta_power == 3));
            CHECK(in_verlinde_ideal(a2, 1, g.payload));
        }
    }
    CHECK(pairs == 3);
    CHECK(rgens == 6);

    // a character outside the ideal is rejected at the gate
    CHECK_THROWS_AS(real_ideal_generators({VirtualCharacter{{Weight{1, 0}, 1}}}, inv, a2, 1),
                    input_error);
}

TEST_CASE("module structure verification") {
    for (auto [f, r, pr, kmax] :
         {std::tuple<char, int, const char*, int>{'A', 1, "trivial_involution", 4},
          {'A', 3, "su_even_quaternionic", 2},
          {'A', 2, "trivial_involution", 2}}) {
        RootDatum rd = datum(f, r);
        RealInvolutionDatum inv = preset(rd, pr);
        for (int k = 0; k <= kmax; ++k) {
            ModuleReport rep = verify_module_structure(rd, inv, k);
            CHECK(rep.passed);
        }
    }
}

TEST_CASE("random diagram involutions either close or trip the evenness guard") {
    // Any (sigma, epsilon) passing validation is accepted; data that do not
    // come from a group involution may legitimately fire evenness_violation,
    // but everything that does multiply must satisfy forgetful commutation.
    std::mt19937 rng(2024);
    struct TypeCase {
        char f;
        int r;
        std::vector<std::vector<int>> involutions; // candidate sigmas, 0-based
    };
    std::vector<TypeCase> cases = {
        {'A', 2, {{0, 1}, {1, 0}}},
        {'A', 3, {{0, 1, 2}, {2, 1, 0}}},
        {'B', 2, {{0, 1}}},
        {'C', 3, {{0, 1, 2}}},
        {'G', 2, {{0, 1}}},
        {'D', 4, {{0, 1, 2, 3}, {0, 1, 3, 2}, {2, 1, 0, 3}}},
    };
    int closed = 0, tripped = 0;
    for (const auto& tc : cases) {
        RootDatum rd = datum(tc.f, tc.r);
        FusionTable table = build_fusion_table(rd, 1);
        for (const auto& sigma : tc.involutions) {
            for (int trial = 0; trial < 6; ++trial) {
                RealInvolutionDatum inv;
                inv.name = "random";
                inv.sigma = sigma;
                inv.epsilon_from_coweight = true;
                for (int i = 0; i < tc.r; ++i) inv.coweight.push_back(rng() % 3);
                if (!all_passed(validate(inv, rd, 1))) continue;
                auto gens = generator_set({rd, inv, table}, 1);
                for (const auto& x : gens)
                    for (const auto& y : gens) {
                        try {
                            RKRElement p = multiply(x, y, table, inv);
                            CHECK(forgetful_image(p, inv) ==
                                  forgetful_product(forgetful_image(x, inv), forgetful_image(y, inv),
                                                    table));
                            ++closed;
                        } catch (const evenness_violation&) {
                            ++tripped;
                        }
                    }
            }
        }
    }
    CHECK(closed > 0);
    // at least one random epsilon is not a fusion grading and trips the guard
    CHECK(tripped > 0);
}

TEST_CASE("forgetful images of decorated generators") {
    Setup s = make('A', 1, "trivial_involution", 2);
    // c(V'_lambda) = V_lambda at the intrinsic beta power
    auto img0 = forgetful_image(rkr_fixed(Weight{2}), s.inv);
    CHECK(img0 == std::map<Weight, KPlusCoefficient>{{Weight{2}, KPlusCoefficient::beta(0)}});
    auto imgq = forgetful_image(rkr_fixed(Weight{1}), s.inv);
    CHECK(imgq == std::map<Weight, KPlusCoefficient>{{Weight{1}, KPlusCoefficient::beta(2)}});
    // c(V'_lambda mu) = 2 V_lambda beta^2 (real type)
    auto imgmu = forgetful_image(rkr_fixed(Weight{2}, KRCoefficient::mu()), s.inv);
    CHECK(imgmu == std::map<Weight, KPlusCoefficient>{{Weight{2}, KPlusCoefficient::beta(2, 2)}});
    // eta coefficients vanish under c
    CHECK(forgetful_image(rkr_fixed(Weight{2}, KRCoefficient::eta()), s.inv).empty());
    CHECK(forgetful_image(RKRElement{}, s.inv).empty());
}

TEST_CASE("rendering of module elements") {
    Setup s = make('A', 2, "trivial_involution", 1);
    RKRElement x;
    x.fixed[Weight{0, 0}] = KRCoefficient::unit(2);
    x.orbit[Weight{0, 1}] = KPlusCoefficient::beta(0);
    CHECK(x.render() == "V'(0,0)⊗(2) + r(V(0,1))");
    CHECK(RKRElement{}.render() == "0");
}
