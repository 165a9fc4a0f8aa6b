#pragma once

#include "verlinde/fusion_ring.hpp"
#include "verlinde/root_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace verlinde {

// The involution sigma on the weight lattice (a Dynkin-diagram symmetry given
// as a permutation of fundamental-weight indices) together with the +-1
// indicator epsilon on sigma-fixed weights. epsilon decides real (+1) versus
// quaternionic (-1) type; it is either evaluated from an integral coweight
// x0 as (-1)^<lambda,x0>, or from a +-1 table on the generators of the fixed
// sublattice, extended multiplicatively.
struct RealInvolutionDatum {
    std::string name;
    std::vector<int> sigma; // 0-based permutation of {0..rank-1}

    bool epsilon_from_coweight = true;
    std::vector<long long> coweight;
    // Keys: "i" for a fixed index, "i+j" (1-based, i<j=sigma(i)) for a swapped
    // pair; values +1 or -1.
    std::map<std::string, int> table;

    int rank() const { return static_cast<int>(sigma.size()); }
};

struct TypeDecomposition {
    std::vector<Weight> fixed_real;
    std::vector<Weight> fixed_quaternionic;
    // (canonical representative, partner); canonical = lexicographically least
    std::vector<std::pair<Weight, Weight>> orbit_pairs;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Built-in involution data. "trivial_involution" is the identity group
// involution, so sigma is the duality permutation -w0 and epsilon the
// classical Frobenius-Schur indicator (coweight 2 rho-check). The
// "su_even_quaternionic" preset is the quaternionic involution of SU(2n):
// sigma = id and epsilon(omega_i) = (-1)^i; it requires family A of odd rank.
RealInvolutionDatum preset(const RootDatum& rd, const std::string& name);

Weight apply_sigma_plus(const RealInvolutionDatum& inv, const Weight& w);

bool is_sigma_fixed(const RealInvolutionDatum& inv, const Weight& w);

// epsilon on a sigma-fixed weight; throws input_error when the table does not
// determine it.
int epsilon_of(const RealInvolutionDatum& inv, const Weight& w);

Weight canonical_orbit_representative(const RealInvolutionDatum& inv, const Weight& w);

TypeDecomposition classify(const RealInvolutionDatum& inv, const LevelKWeightSet& wts);

// Diagnostics; never throws on a failed check.
std::vector<CheckResult> validate(const RealInvolutionDatum& inv, const RootDatum& rd, int k_max);

bool all_passed(const std::vector<CheckResult>& checks);

// sigma-image of a virtual character (the action of conjugation-twist on the
// irreducible basis).
VirtualCharacter sigma_bar(const RealInvolutionDatum& inv, const VirtualCharacter& vc);

} // namespace verlinde
