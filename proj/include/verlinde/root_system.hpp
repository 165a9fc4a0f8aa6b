#pragma once

#include "verlinde/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace verlinde {

// Dynkin labels in the fundamental-weight basis. This is the only stored
// representation of weights; root-basis coordinates are derived on demand.
using Weight = std::vector<int>;

struct CartanType {
    char family = 'A'; // one of A B C D E F G
    int rank = 1;
};

CartanType parse_cartan_type(const std::string& family, int rank);

// Immutable exact root-system data for one simple type, Bourbaki numbering.
// cartan[i][j] = <alpha_j, alpha_i^vee>, so the Dynkin labels of a root with
// root-basis coordinates c are the matrix-vector product cartan * c.
struct RootDatum {
    CartanType type;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<Rational>> inv_cartan;
    std::vector<Rational> d;                        // d_i = B(alpha_i, alpha_i)/2
    std::vector<std::vector<int>> positive_roots;   // root-basis coordinates
    std::vector<Weight> positive_roots_weight;      // same roots, Dynkin labels
    std::vector<Rational> positive_root_halfnorm;   // d_alpha = B(alpha,alpha)/2
    Weight rho;                                     // all labels 1
    std::vector<int> alpha_max;                     // highest root, root basis
    Weight alpha_max_weight;
    std::vector<long long> comarks;                 // <omega_i, alpha_max^vee>
    std::vector<std::vector<Rational>> gram;        // gram[i][j] = B(omega_i, omega_j)
    long long dual_coxeter = 0;                     // 1 + B(rho, alpha_max)
    BigInt weyl_order;                              // |W|, by the closed formula

    bool is_dominant(const Weight& w) const;
    // Pairing <lambda, alpha_max^vee>; the level of a dominant weight.
    long long level_of(const Weight& w) const;
};

RootDatum build_root_datum(CartanType type);

// B(lambda, mu), exact.
Rational inner_product(const RootDatum& rd, const Weight& a, const Weight& b);

// B(lambda, alpha) for a positive root given by its index in positive_roots.
Rational inner_product_with_root(const RootDatum& rd, const Weight& w, int root_index);

// Weyl reduction with determinant tracking. Returns (delta, s) where delta is
// the dominant representative of xi and s = det(w) for the reducing Weyl
// element, or s = 0 when xi lies on a reflection wall (zero label in delta).
std::pair<Weight, int> dominant_reduce_shifted(const RootDatum& rd, Weight xi);

// Dominant representative without sign bookkeeping.
Weight dominant_representative(const RootDatum& rd, Weight xi);

// -w0(lambda): highest weight of the dual representation.
Weight dual_weight(const RootDatum& rd, const Weight& w);

// Full Weyl orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& dominant);

// Orbit of a regular dominant weight together with det(w) per element.
std::map<Weight, int> weyl_orbit_signed(const RootDatum& rd, const Weight& regular_dominant);

// Weyl dimension formula, exact.
BigInt weyl_dimension(const RootDatum& rd, const Weight& lambda);

// Full weight diagram of the irreducible with highest weight lambda,
// multiplicities by the Freudenthal recursion.
std::map<Weight, long long> weight_multiplicities(const RootDatum& rd, const Weight& lambda);

// Dominant weights of the diagram only (keys are dominant).
std::map<Weight, long long> dominant_weight_multiplicities(const RootDatum& rd, const Weight& lambda);

std::string weight_to_string(const Weight& w);

} // namespace verlinde
