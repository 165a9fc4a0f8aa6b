#pragma once

#include "verlinde/fusion_ring.hpp"
#include "verlinde/kr_algebra.hpp"
#include "verlinde/real_structure.hpp"

#include <map>
#include <string>
#include <vector>

namespace verlinde {

// KR_*(pt)-module generators of the level-k graded Real fusion module:
// one Fixed generator V'_lambda per sigma-fixed lambda (degree 0 when
// epsilon = +1, degree -4 when epsilon = -1) and one OrbitPair generator
// r(V_nu) per 2-element sigma-orbit, nu the canonical representative
// (beta^i shifts of the latter give degrees -2i mod 8).
struct RealBasisElement {
    enum class Kind { Fixed, OrbitPair };
    Kind kind = Kind::Fixed;
    Weight weight;
    int epsilon = 0; // +-1 for Fixed, 0 for OrbitPair
    Weight partner;  // sigma(nu) for OrbitPair
    int degree = 0;  // 0 or -4 for Fixed, 0 for the beta^0 orbit generator
};

// Element of the graded module in canonical normal form: a KR_*(pt)
// coefficient per sigma-fixed weight (multiplying V'_lambda) plus a K_*(+)
// coefficient per canonical orbit representative nu (inside r(V_nu tensor -)).
// Orbit contributions on the non-canonical member are folded onto nu via
// r(V_{sigma nu} tensor beta^i) = (-1)^i r(V_nu tensor beta^i).
struct RKRElement {
    std::map<Weight, KRCoefficient> fixed;
    std::map<Weight, KPlusCoefficient> orbit;

    void normalize();
    bool is_zero() const { return fixed.empty() && orbit.empty(); }
    friend bool operator==(const RKRElement& a, const RKRElement& b);
    friend bool operator!=(const RKRElement& a, const RKRElement& b) { return !(a == b); }

    std::string render() const;
};

RKRElement rkr_fixed(const Weight& lambda, const KRCoefficient& coeff = KRCoefficient::unit());
RKRElement rkr_orbit(const RealInvolutionDatum& inv, const Weight& nu,
                     const KPlusCoefficient& coeff = KPlusCoefficient::beta(0));

// Canonical form of r(sum_w V_w tensor p_w) for an arbitrary K(+)-weighted
// character: sigma-fixed weights convert through V' generators, orbit weights
// fold onto canonical representatives.
RKRElement rkr_realify(const RealInvolutionDatum& inv,
                       const std::map<Weight, KPlusCoefficient>& character);

std::vector<RealBasisElement> real_basis(const RootDatum& rd, const RealInvolutionDatum& inv, int k);

// Free rank of the degree-0 component: #fixed + #orbit pairs.
long long rr_k_rank(const RootDatum& rd, const RealInvolutionDatum& inv, int k);

// Graded product. Bilinear over the KR/K(+) coefficients, fusion on the
// weights, with the c-preimage bookkeeping on the fixed part. Throws
// evenness_violation when a mismatched-degree fixed constituent arrives with
// an odd fusion coefficient (impossible for involution data that come from an
// actual group involution).
RKRElement multiply(const RKRElement& x, const RKRElement& y, const FusionTable& table,
                    const RealInvolutionDatum& inv);

// Forgetful map into R(G) tensor K_*(+) (complex side, mod-8 collapsed).
std::map<Weight, KPlusCoefficient> forgetful_image(const RKRElement& x,
                                                   const RealInvolutionDatum& inv);

// Product on the complex side: fusion on weights, K(+) on coefficients.
// Independent oracle for multiply() through the forgetful map.
std::map<Weight, KPlusCoefficient> forgetful_product(const std::map<Weight, KPlusCoefficient>& a,
                                                     const std::map<Weight, KPlusCoefficient>& b,
                                                     const FusionTable& table);

// The set S of square-free monomials in non-fixed fundamental weights whose
// support D satisfies D intersect sigma(D) = empty, plus the unit monomial.
// Monomials are sorted 0-based index sets, ordered by (size, lex).
std::vector<std::vector<int>> enumerate_S(const RootDatum& rd, const RealInvolutionDatum& inv);

struct RealIdealGenerator {
    enum class Kind { CInv, CInvPair, RGen };
    Kind kind = Kind::CInv;
    VirtualCharacter rho;      // the underlying Verlinde-ideal generator
    std::vector<int> monomial; // tau (CInvPair) or chi (RGen); empty = 1
    int beta_power = 0;        // 1 or 3 for RGen
    VirtualCharacter payload;  // rho | rho*tau + sigma(rho*tau) | rho*chi
};

// Real Verlinde ideal generators from a generating set of I_k: sigma-stable
// generators give c^{-1}(rho); the rest give the paired c^{-1}(rho tau +
// sigma(rho tau)) for tau in S and r(rho chi tensor beta^i) for chi in S,
// i in {1,3}. Every input is gated by the numeric vanishing test.
std::vector<RealIdealGenerator> real_ideal_generators(const std::vector<VirtualCharacter>& ik_gens,
                                                      const RealInvolutionDatum& inv,
                                                      const RootDatum& rd, int k);

// Highest weights (k+1)L1 + L2 + ... + Li, i = 0..rank-1, in Dynkin labels.
// Only type A has built-in Verlinde ideal generators.
std::vector<VirtualCharacter> builtin_ik_generators(const RootDatum& rd, int k);

struct ModuleReport {
    bool passed = false;
    std::vector<CheckResult> checks;
};

// Structural checks: forgetful span of the degree {0,-4} generators equals
// the sigma-invariant sublattice, product closure over all generator pairs,
// and the rank formula.
ModuleReport verify_module_structure(const RootDatum& rd, const RealInvolutionDatum& inv, int k);

} // namespace verlinde
