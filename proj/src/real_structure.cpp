#include "verlinde/real_structure.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace verlinde {

namespace {

std::string pair_key(int i, int j) { // 1-based, i < j
    if (i > j) std::swap(i, j);
    return std::to_string(i + 1) + "+" + std::to_string(j + 1);
}

// Generators of the sigma-fixed sublattice, as (key, exponent extractor).
// A fixed weight decomposes as sum over fixed indices i of w[i]*omega_i plus
// sum over swapped pairs {i,j} of w[i]*(omega_i+omega_j).
std::vector<std::pair<std::string, int>> fixed_generator_exponents(const RealInvolutionDatum& inv,
                                                                   const Weight& w) {
    std::vector<std::pair<std::string, int>> out;
    for (int i = 0; i < inv.rank(); ++i) {
        int j = inv.sigma[i];
        if (j == i)
            out.push_back({std::to_string(i + 1), w[i]});
        else if (i < j)
            out.push_back({pair_key(i, j), w[i]});
    }
    return out;
}

} // namespace

Weight apply_sigma_plus(const RealInvolutionDatum& inv, const Weight& w) {
    if (static_cast<int>(w.size()) != inv.rank())
        throw input_error("apply_sigma_plus: rank mismatch");
    Weight out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[inv.sigma[i]];
    return out;
}

bool is_sigma_fixed(const RealInvolutionDatum& inv, const Weight& w) {
    return apply_sigma_plus(inv, w) == w;
}

int epsilon_of(const RealInvolutionDatum& inv, const Weight& w) {
    if (!is_sigma_fixed(inv, w)) throw input_error("epsilon_of: weight is not sigma-fixed");
    if (inv.epsilon_from_coweight) {
        long long pairing = 0;
        for (size_t i = 0; i < w.size(); ++i) pairing += w[i] * inv.coweight[i];
        return (pairing % 2 + 2) % 2 == 0 ? 1 : -1;
    }
    int sign = 1;
    for (const auto& [key, expo] : fixed_generator_exponents(inv, w)) {
        if (expo == 0) continue;
        auto it = inv.table.find(key);
        if (it == inv.table.end())
            throw input_error("epsilon undefined on fixed-lattice generator '" + key + "'");
        if (it->second == -1 && (expo % 2 + 2) % 2 == 1) sign = -sign;
    }
    return sign;
}

Weight canonical_orbit_representative(const RealInvolutionDatum& inv, const Weight& w) {
    Weight other = apply_sigma_plus(inv, w);
    return std::min(w, other);
}

RealInvolutionDatum preset(const RootDatum& rd, const std::string& name) {
    RealInvolutionDatum inv;
    inv.name = name;
    inv.sigma.resize(rd.rank);
    if (name == "trivial_involution") {
        // sigma = -w0, read off from the duals of the fundamental weights
        for (int i = 0; i < rd.rank; ++i) {
            Weight omega(rd.rank, 0);
            omega[i] = 1;
            Weight dual = dual_weight(rd, omega);
            int hit = -1;
            for (int j = 0; j < rd.rank; ++j) {
                if (dual[j] == 1 && hit < 0)
                    hit = j;
                else if (dual[j] != 0)
                    throw numeric_error("dual of a fundamental weight is not fundamental (internal)");
            }
            inv.sigma[i] = hit;
        }
        // epsilon(lambda) = (-1)^<lambda, 2 rho-check>, the classical
        // Frobenius-Schur indicator on self-dual weights
        inv.epsilon_from_coweight = true;
        inv.coweight.resize(rd.rank);
        for (int i = 0; i < rd.rank; ++i) {
            Rational x(0);
            for (size_t a = 0; a < rd.positive_roots.size(); ++a)
                x += Rational(rd.positive_roots[a][i]) * rd.d[i] / rd.positive_root_halfnorm[a];
            inv.coweight[i] = x.to_integer().to_longlong();
        }
        return inv;
    }
    if (name == "su_even_quaternionic") {
        if (rd.type.family != 'A' || rd.rank % 2 == 0)
            throw input_error("preset su_even_quaternionic requires type A of odd rank (SU(2n))");
        for (int i = 0; i < rd.rank; ++i) inv.sigma[i] = i;
        inv.epsilon_from_coweight = true;
        inv.coweight.resize(rd.rank);
        for (int i = 0; i < rd.rank; ++i) inv.coweight[i] = (i % 2 == 0) ? 1 : 0; // omega_1, omega_3, ...
        return inv;
    }
    throw input_error("unknown involution preset '" + name + "'");
}

TypeDecomposition classify(const RealInvolutionDatum& inv, const LevelKWeightSet& wts) {
    TypeDecomposition out;
    std::set<Weight> handled;
    for (const auto& w : wts.weights) {
        Weight img = apply_sigma_plus(inv, w);
        if (img == w) {
            if (epsilon_of(inv, w) > 0)
                out.fixed_real.push_back(w);
            else
                out.fixed_quaternionic.push_back(w);
        } else {
            Weight rep = std::min(w, img);
            if (handled.insert(rep).second) out.orbit_pairs.push_back({rep, std::max(w, img)});
        }
    }
    return out;
}

std::vector<CheckResult> validate(const RealInvolutionDatum& inv, const RootDatum& rd, int k_max) {
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok, detail});
    };

    if (inv.rank() != rd.rank) {
        add("rank_matches", false, "involution rank differs from the root datum rank");
        return out;
    }
    add("rank_matches", true, "");

    bool perm_ok = true;
    std::vector<int> seen(rd.rank, 0);
    for (int v : inv.sigma) {
        if (v < 0 || v >= rd.rank) {
            perm_ok = false;
            break;
        }
        seen[v]++;
    }
    if (perm_ok)
        for (int c : seen) perm_ok = perm_ok && c == 1;
    add("sigma_is_permutation", perm_ok, perm_ok ? "" : "not a permutation of the index set");
    if (!perm_ok) return out;

    bool invol = true;
    for (int i = 0; i < rd.rank; ++i)
        if (inv.sigma[inv.sigma[i]] != i) invol = false;
    add("sigma_involution", invol, invol ? "" : "sigma^2 != id");

    bool cartan = true;
    std::string cartan_detail;
    for (int i = 0; i < rd.rank && cartan; ++i)
        for (int j = 0; j < rd.rank && cartan; ++j)
            if (rd.cartan[inv.sigma[i]][inv.sigma[j]] != rd.cartan[i][j]) {
                cartan = false;
                std::ostringstream os;
                os << "A[" << i + 1 << "][" << j + 1 << "] not preserved";
                cartan_detail = os.str();
            }
    add("sigma_preserves_cartan", cartan, cartan_detail);

    bool levels = true;
    std::string level_detail;
    if (invol && cartan) {
        for (int k = 0; k <= k_max && levels; ++k) {
            LevelKWeightSet wts = level_weights(rd, k);
            for (const auto& w : wts.weights) {
                Weight img = apply_sigma_plus(inv, w);
                if (wts.index_of(img) < 0) {
                    levels = false;
                    std::ostringstream os;
                    os << "sigma(" << weight_to_string(w) << ") escapes the level-" << k << " set";
                    level_detail = os.str();
                    break;
                }
            }
        }
    } else {
        levels = false;
        level_detail = "skipped: sigma is not a diagram involution";
    }
    add("level_sets_invariant", levels, level_detail);

    bool eps_ok = true;
    std::string eps_detail;
    if (inv.epsilon_from_coweight) {
        if (static_cast<int>(inv.coweight.size()) != rd.rank) {
            eps_ok = false;
            eps_detail = "coweight length differs from the rank";
        }
    } else {
        for (const auto& [key, val] : inv.table)
            if (val != 1 && val != -1) {
                eps_ok = false;
                eps_detail = "table value for '" + key + "' is not +-1";
            }
        // every generator of the fixed sublattice must be covered
        for (int i = 0; i < rd.rank && eps_ok; ++i) {
            int j = inv.sigma[i];
            std::string key = j == i ? std::to_string(i + 1) : pair_key(i, j);
            if (j >= i && !inv.table.count(key)) {
                eps_ok = false;
                eps_detail = "epsilon undefined on fixed-lattice generator '" + key + "'";
            }
        }
        // keys must describe actual generators of the fixed sublattice
        for (const auto& [key, val] : inv.table) {
            (void)val;
            if (!eps_ok) break;
            auto plus = key.find('+');
            try {
                if (plus == std::string::npos) {
                    int i = std::stoi(key) - 1;
                    if (i < 0 || i >= rd.rank || inv.sigma[i] != i) {
                        eps_ok = false;
                        eps_detail = "key '" + key + "' is not a sigma-fixed index";
                    }
                } else {
                    int i = std::stoi(key.substr(0, plus)) - 1;
                    int j = std::stoi(key.substr(plus + 1)) - 1;
                    if (i < 0 || j < 0 || i >= rd.rank || j >= rd.rank || inv.sigma[i] != j || i >= j) {
                        eps_ok = false;
                        eps_detail = "key '" + key + "' is not a swapped pair i+sigma(i)";
                    }
                }
            } catch (const std::exception&) {
                eps_ok = false;
                eps_detail = "unparsable table key '" + key + "'";
            }
        }
    }
    add("epsilon_well_defined", eps_ok, eps_detail);
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

VirtualCharacter sigma_bar(const RealInvolutionDatum& inv, const VirtualCharacter& vc) {
    VirtualCharacter out;
    for (const auto& [w, c] : vc) out[apply_sigma_plus(inv, w)] += c;
    return out;
}

} // namespace verlinde
