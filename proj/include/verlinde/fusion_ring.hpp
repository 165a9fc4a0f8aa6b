#pragma once

#include "verlinde/root_system.hpp"

#include <complex>
#include <map>
#include <vector>

namespace verlinde {

// Finitely supported integer combination of dominant weights (a virtual
// character, written in the irreducible basis).
using VirtualCharacter = std::map<Weight, long long>;

struct LevelKWeightSet {
    int level = 0;
    std::vector<Weight> weights; // lexicographically sorted, duplicate-free

    int index_of(const Weight& w) const; // -1 when absent
};

// Structure constants c_{lm}^n of the level-k fusion ring, stored for l <= m
// as indices into the weight list of the associated LevelKWeightSet.
struct FusionTable {
    int level = 0;
    LevelKWeightSet weights;
    std::map<std::pair<int, int>, std::map<int, long long>> coeffs;

    const std::map<int, long long>& get(int l, int m) const;
};

// Points exp_T(B#((lambda+rho)/(k+h))) of the vanishing-ideal description,
// stored as exact coroot-basis coordinates; pairing a weight against a point
// is the plain dot product of Dynkin labels with the coordinates.
struct SpecialPointSet {
    int level = 0;
    std::vector<std::vector<Rational>> points; // one per weight of Lambda*_k
};

struct FusionLimits {
    long long max_alcove = 5000;      // |Lambda*_k| guard for table/S-matrix
    long long max_reflection_steps = 10000;
};

LevelKWeightSet level_weights(const RootDatum& rd, int k);

// Classical tensor product multiplicities (Klimyk over the weight diagram of
// the smaller factor).
std::map<Weight, long long> tensor_decompose(const RootDatum& rd, const Weight& a, const Weight& b);

// Level-k fusion coefficients by affine Weyl reduction of the classical
// tensor decomposition at shifted level k + h.
std::map<Weight, long long> fusion_coeffs(const RootDatum& rd, int k, const Weight& a, const Weight& b,
                                          const FusionLimits& limits = {});

// Table fill is pure per pair; threads > 1 splits the pair list over a worker
// pool. The result is identical for any thread count.
FusionTable build_fusion_table(const RootDatum& rd, int k, const FusionLimits& limits = {},
                               int threads = 1);

// Numeric modular S-matrix, rows/columns indexed by the sorted weight list.
// Unitary within 1e-9; used as a cross-check oracle for the exact tables.
std::vector<std::vector<std::complex<double>>> s_matrix(const RootDatum& rd, int k,
                                                        const FusionLimits& limits = {});

// Verlinde-formula fusion numbers from a precomputed S-matrix.
std::map<Weight, long long> fusion_via_smatrix(const RootDatum& rd, int k,
                                               const std::vector<std::vector<std::complex<double>>>& s,
                                               const LevelKWeightSet& wts, const Weight& a, const Weight& b);

SpecialPointSet special_points(const RootDatum& rd, int k);

// Character value at a torus point given in coroot coordinates. Returns the
// Weyl dimension at the zero point.
std::complex<double> character_eval(const RootDatum& rd, const Weight& lambda,
                                    const std::vector<Rational>& point);

// True iff the virtual character vanishes (to 1e-8 relative to its largest
// term) at every special point of level k.
bool in_verlinde_ideal(const RootDatum& rd, int k, const VirtualCharacter& vc);

// sigma-image of a virtual character under a label permutation, and product
// of two virtual characters via classical tensor decomposition.
VirtualCharacter virtual_character_product(const RootDatum& rd, const VirtualCharacter& x,
                                           const VirtualCharacter& y);

} // namespace verlinde
