#include "verlinde/fusion_ring.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

namespace verlinde {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Weyl groups up to this order are enumerated directly; larger ones switch
// the character evaluation to weight-multiplicity sums.
const BigInt kWeylEnumerationLimit(1000000);

// A torus point over a single small denominator: coordinate j is num[j]/den.
// Keeps the pairing <w, x> in plain 64-bit arithmetic (still exact) instead
// of allocating rationals in the character inner loops.
struct FixedPoint {
    std::vector<long long> num;
    long long den = 1;
    bool zero = true;
};

FixedPoint fix_point(const std::vector<Rational>& p) {
    FixedPoint out;
    BigInt den(1);
    for (const auto& c : p) {
        BigInt g = BigInt::gcd(den, c.denominator());
        den = den / g * c.denominator();
    }
    out.den = den.to_longlong();
    for (const auto& c : p) {
        BigInt scaled = c.numerator() * (den / c.denominator());
        long long v = scaled.to_longlong();
        out.num.push_back(v);
        if (v) out.zero = false;
    }
    return out;
}

std::complex<double> unit_exp_at(const Weight& w, const FixedPoint& p) {
    long long acc = 0;
    for (size_t i = 0; i < w.size(); ++i) acc += static_cast<long long>(w[i]) * p.num[i];
    long long r = acc % p.den;
    if (r < 0) r += p.den;
    double f = kTwoPi * static_cast<double>(r) / static_cast<double>(p.den);
    return {std::cos(f), std::sin(f)};
}

void check_in_alcove(const RootDatum& rd, int k, const Weight& w, const char* who) {
    if (static_cast<int>(w.size()) != rd.rank) throw input_error(std::string(who) + ": rank mismatch");
    if (!rd.is_dominant(w) || rd.level_of(w) > k) {
        std::ostringstream os;
        os << who << ": weight " << weight_to_string(w) << " is not a level-" << k << " weight";
        throw input_error(os.str());
    }
}

void enumerate_rec(const RootDatum& rd, int k, int pos, long long budget, Weight& cur,
                   std::vector<Weight>& out) {
    if (pos == rd.rank) {
        out.push_back(cur);
        return;
    }
    long long cm = rd.comarks[pos];
    for (long long v = 0; cm * v <= budget; ++v) {
        cur[pos] = static_cast<int>(v);
        enumerate_rec(rd, k, pos + 1, budget - cm * v, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

int LevelKWeightSet::index_of(const Weight& w) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), w);
    if (it == weights.end() || *it != w) return -1;
    return static_cast<int>(it - weights.begin());
}

const std::map<int, long long>& FusionTable::get(int l, int m) const {
    if (l > m) std::swap(l, m);
    auto it = coeffs.find({l, m});
    if (it == coeffs.end()) throw input_error("fusion table: pair out of range");
    return it->second;
}

LevelKWeightSet level_weights(const RootDatum& rd, int k) {
    if (k < 0) throw input_error("level_weights: negative level");
    LevelKWeightSet out;
    out.level = k;
    Weight cur(rd.rank, 0);
    enumerate_rec(rd, k, 0, k, cur, out.weights);
    std::sort(out.weights.begin(), out.weights.end());
    return out;
}

std::map<Weight, long long> tensor_decompose(const RootDatum& rd, const Weight& a, const Weight& b) {
    if (!rd.is_dominant(a) || !rd.is_dominant(b))
        throw input_error("tensor_decompose: weights must be dominant");
    const Weight* small = &a;
    const Weight* big = &b;
    if (weyl_dimension(rd, a) > weyl_dimension(rd, b)) std::swap(small, big);

    std::map<Weight, long long> out;
    for (const auto& [nu, m] : weight_multiplicities(rd, *small)) {
        Weight xi(rd.rank);
        for (int i = 0; i < rd.rank; ++i) xi[i] = nu[i] + (*big)[i] + 1;
        auto [delta, s] = dominant_reduce_shifted(rd, xi);
        if (s == 0) continue;
        for (int i = 0; i < rd.rank; ++i) delta[i] -= 1;
        out[delta] += s * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) {
            it = out.erase(it);
        } else if (it->second < 0) {
            throw numeric_error("tensor_decompose: negative multiplicity (internal)");
        } else {
            ++it;
        }
    }
    return out;
}

std::map<Weight, long long> fusion_coeffs(const RootDatum& rd, int k, const Weight& a, const Weight& b,
                                          const FusionLimits& limits) {
    check_in_alcove(rd, k, a, "fusion_coeffs");
    check_in_alcove(rd, k, b, "fusion_coeffs");
    const long long K = k + rd.dual_coxeter;
    const Weight& theta = rd.alpha_max_weight;

    std::map<Weight, long long> out;
    for (const auto& [nu, m] : tensor_decompose(rd, a, b)) {
        Weight xi(rd.rank);
        for (int i = 0; i < rd.rank; ++i) xi[i] = nu[i] + 1;
        int sign = 1;
        long long steps = 0;
        for (;;) {
            if (++steps > limits.max_reflection_steps)
                throw numeric_error("fusion_coeffs: affine reflection guard exceeded");
            int neg = -1;
            for (int i = 0; i < rd.rank; ++i)
                if (xi[i] < 0) {
                    neg = i;
                    break;
                }
            if (neg >= 0) {
                int v = xi[neg];
                for (int j = 0; j < rd.rank; ++j) xi[j] -= v * rd.cartan[j][neg];
                sign = -sign;
                continue;
            }
            long long lv = rd.level_of(xi);
            if (lv > K) {
                long long excess = lv - K;
                for (int j = 0; j < rd.rank; ++j) xi[j] -= static_cast<int>(excess) * theta[j];
                sign = -sign;
                continue;
            }
            bool wall = lv == K;
            for (int i = 0; i < rd.rank && !wall; ++i)
                if (xi[i] == 0) wall = true;
            if (wall) sign = 0;
            break;
        }
        if (sign == 0) continue;
        Weight nu2(rd.rank);
        for (int i = 0; i < rd.rank; ++i) nu2[i] = xi[i] - 1;
        out[nu2] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) {
            it = out.erase(it);
        } else if (it->second < 0) {
            throw numeric_error("fusion_coeffs: negative coefficient (internal)");
        } else {
            ++it;
        }
    }
    return out;
}

FusionTable build_fusion_table(const RootDatum& rd, int k, const FusionLimits& limits, int threads) {
    FusionTable t;
    t.level = k;
    t.weights = level_weights(rd, k);
    long long n = static_cast<long long>(t.weights.weights.size());
    if (n > limits.max_alcove) {
        std::ostringstream os;
        os << "level-" << k << " alcove has " << n << " weights, over the guard of "
           << limits.max_alcove;
        throw resource_error(os.str());
    }
    std::vector<std::pair<int, int>> pairs;
    for (int l = 0; l < n; ++l)
        for (int m = l; m < n; ++m) pairs.push_back({l, m});

    std::vector<std::map<int, long long>> rows(pairs.size());
    auto fill = [&](size_t begin, size_t end) {
        for (size_t p = begin; p < end; ++p) {
            auto [l, m] = pairs[p];
            auto f = fusion_coeffs(rd, k, t.weights.weights[l], t.weights.weights[m], limits);
            std::map<int, long long> row;
            for (const auto& [nu, c] : f) {
                int idx = t.weights.index_of(nu);
                if (idx < 0) throw numeric_error("fusion constituent escaped the alcove (internal)");
                row[idx] = c;
            }
            rows[p] = std::move(row);
        }
    };
    if (threads <= 1 || pairs.size() < 2) {
        fill(0, pairs.size());
    } else {
        size_t nt = std::min<size_t>(threads, pairs.size());
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nt);
        size_t chunk = (pairs.size() + nt - 1) / nt;
        for (size_t w = 0; w < nt; ++w) {
            size_t b = w * chunk, e = std::min(pairs.size(), b + chunk);
            pool.emplace_back([&, w, b, e] {
                try {
                    fill(b, e);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }
    for (size_t p = 0; p < pairs.size(); ++p) t.coeffs[pairs[p]] = std::move(rows[p]);
    return t;
}

SpecialPointSet special_points(const RootDatum& rd, int k) {
    if (k < 0) throw input_error("special_points: negative level");
    SpecialPointSet out;
    out.level = k;
    const Rational K(k + rd.dual_coxeter);
    for (const auto& lam : level_weights(rd, k).weights) {
        Weight lr(rd.rank);
        for (int i = 0; i < rd.rank; ++i) lr[i] = lam[i] + 1;
        std::vector<Rational> p(rd.rank, Rational(0));
        for (int i = 0; i < rd.rank; ++i) {
            for (int j = 0; j < rd.rank; ++j)
                if (lr[j]) p[i] += rd.gram[i][j] * Rational(lr[j]);
            p[i] /= K;
        }
        out.points.push_back(std::move(p));
    }
    return out;
}

namespace {

std::vector<std::complex<double>> weyl_denominators(const RootDatum& rd,
                                                    const std::vector<FixedPoint>& points) {
    std::vector<std::complex<double>> out(points.size(), 0.0);
    auto rho_orbit = weyl_orbit_signed(rd, rd.rho);
    for (size_t p = 0; p < points.size(); ++p) {
        std::complex<double> d = 0;
        for (const auto& [xi, s] : rho_orbit) d += static_cast<double>(s) * unit_exp_at(xi, points[p]);
        out[p] = d;
    }
    return out;
}

// Character values of one weight at many points, sharing the orbit (or the
// weight diagram) across points. The Weyl-denominator values may be supplied
// when several weights are evaluated at the same points.
std::vector<std::complex<double>> character_values(const RootDatum& rd, const Weight& lambda,
                                                   const std::vector<FixedPoint>& points,
                                                   const std::vector<std::complex<double>>* dens) {
    std::vector<std::complex<double>> out(points.size());

    if (rd.weyl_order <= kWeylEnumerationLimit) {
        Weight lr(rd.rank);
        for (int i = 0; i < rd.rank; ++i) lr[i] = lambda[i] + 1;
        auto orbit = weyl_orbit_signed(rd, lr);
        std::vector<std::complex<double>> den_storage;
        if (!dens) {
            den_storage = weyl_denominators(rd, points);
            dens = &den_storage;
        }
        double dim = 0;
        for (size_t p = 0; p < points.size(); ++p) {
            if (points[p].zero) {
                if (dim == 0) dim = weyl_dimension(rd, lambda).to_double();
                out[p] = dim;
                continue;
            }
            if (std::abs((*dens)[p]) < 1e-10) throw numeric_error("character_eval: singular point");
            std::complex<double> num = 0;
            for (const auto& [xi, s] : orbit)
                num += static_cast<double>(s) * unit_exp_at(xi, points[p]);
            out[p] = num / (*dens)[p];
        }
        return out;
    }

    auto diagram = weight_multiplicities(rd, lambda);
    for (size_t p = 0; p < points.size(); ++p) {
        std::complex<double> v = 0;
        for (const auto& [mu, m] : diagram) v += static_cast<double>(m) * unit_exp_at(mu, points[p]);
        out[p] = v;
    }
    return out;
}

std::vector<FixedPoint> fix_points(const std::vector<std::vector<Rational>>& pts) {
    std::vector<FixedPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(fix_point(p));
    return out;
}

} // namespace

std::complex<double> character_eval(const RootDatum& rd, const Weight& lambda,
                                    const std::vector<Rational>& point) {
    if (!rd.is_dominant(lambda)) throw input_error("character_eval: weight not dominant");
    if (static_cast<int>(point.size()) != rd.rank) throw input_error("character_eval: rank mismatch");
    return character_values(rd, lambda, {fix_point(point)}, nullptr)[0];
}

std::vector<std::vector<std::complex<double>>> s_matrix(const RootDatum& rd, int k,
                                                        const FusionLimits& limits) {
    LevelKWeightSet wts = level_weights(rd, k);
    const long long n = static_cast<long long>(wts.weights.size());
    if (n > limits.max_alcove) {
        std::ostringstream os;
        os << "s_matrix: alcove size " << n << " over the guard of " << limits.max_alcove;
        throw resource_error(os.str());
    }
    SpecialPointSet pts = special_points(rd, k);
    const Rational K(k + rd.dual_coxeter);

    // Weyl denominator magnitude at each special point.
    std::vector<double> D(n, 1.0);
    for (long long s = 0; s < n; ++s) {
        Weight sr(rd.rank);
        for (int i = 0; i < rd.rank; ++i) sr[i] = wts.weights[s][i] + 1;
        for (size_t a = 0; a < rd.positive_roots.size(); ++a) {
            Rational f = (inner_product_with_root(rd, sr, static_cast<int>(a)) / K).fractional_part();
            D[s] *= 2.0 * std::sin(std::numbers::pi * f.to_double());
        }
        if (std::abs(D[s]) < 1e-10) throw numeric_error("s_matrix: singular special point");
    }

    std::vector<FixedPoint> fixed = fix_points(pts.points);
    std::vector<std::complex<double>> dens;
    const std::vector<std::complex<double>>* dens_ptr = nullptr;
    if (rd.weyl_order <= kWeylEnumerationLimit) {
        dens = weyl_denominators(rd, fixed);
        dens_ptr = &dens;
    }
    std::vector<std::vector<std::complex<double>>> S(n, std::vector<std::complex<double>>(n));
    for (long long l = 0; l < n; ++l) {
        auto chi = character_values(rd, wts.weights[l], fixed, dens_ptr);
        for (long long s = 0; s < n; ++s) S[l][s] = std::conj(chi[s]) * D[s];
    }

    double norm0 = 0;
    for (long long s = 0; s < n; ++s) norm0 += std::norm(S[0][s]);
    norm0 = std::sqrt(norm0);
    for (auto& row : S)
        for (auto& v : row) v /= norm0;

    // unitarity contract
    double worst = 0;
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            std::complex<double> dot = 0;
            for (long long s = 0; s < n; ++s) dot += S[i][s] * std::conj(S[j][s]);
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    if (worst > 1e-9) {
        std::ostringstream os;
        os << "s_matrix: unitarity defect " << worst << " exceeds 1e-9";
        throw numeric_error(os.str());
    }
    return S;
}

std::map<Weight, long long> fusion_via_smatrix(const RootDatum& rd, int k,
                                               const std::vector<std::vector<std::complex<double>>>& s,
                                               const LevelKWeightSet& wts, const Weight& a, const Weight& b) {
    check_in_alcove(rd, k, a, "fusion_via_smatrix");
    check_in_alcove(rd, k, b, "fusion_via_smatrix");
    int ia = wts.index_of(a), ib = wts.index_of(b);
    if (ia < 0 || ib < 0) throw input_error("fusion_via_smatrix: weight not in the index");
    const long long n = static_cast<long long>(wts.weights.size());
    std::map<Weight, long long> out;
    for (long long nu = 0; nu < n; ++nu) {
        std::complex<double> acc = 0;
        for (long long sig = 0; sig < n; ++sig)
            acc += s[ia][sig] * s[ib][sig] * std::conj(s[nu][sig]) / s[0][sig];
        long long r = std::llround(acc.real());
        if (std::abs(acc - static_cast<double>(r)) > 1e-6) {
            std::ostringstream os;
            os << "fusion_via_smatrix: value " << acc.real() << "+" << acc.imag()
               << "i too far from an integer";
            throw numeric_error(os.str());
        }
        if (r != 0) out[wts.weights[nu]] = r;
    }
    return out;
}

bool in_verlinde_ideal(const RootDatum& rd, int k, const VirtualCharacter& vc) {
    bool any = false;
    for (const auto& [w, c] : vc) {
        if (!rd.is_dominant(w)) throw input_error("in_verlinde_ideal: non-dominant weight");
        if (c != 0) any = true;
    }
    if (!any) return true;
    SpecialPointSet pts = special_points(rd, k);
    const size_t np = pts.points.size();
    std::vector<FixedPoint> fixed = fix_points(pts.points);

    std::vector<std::complex<double>> dens;
    const std::vector<std::complex<double>>* dens_ptr = nullptr;
    if (rd.weyl_order <= kWeylEnumerationLimit) {
        dens = weyl_denominators(rd, fixed);
        dens_ptr = &dens;
    }

    std::vector<std::complex<double>> sum(np, 0.0);
    std::vector<double> scale(np, 1.0);
    for (const auto& [w, c] : vc) {
        if (c == 0) continue;
        auto chi = character_values(rd, w, fixed, dens_ptr);
        for (size_t p = 0; p < np; ++p) {
            std::complex<double> term = static_cast<double>(c) * chi[p];
            sum[p] += term;
            scale[p] = std::max(scale[p], std::abs(term));
        }
    }
    for (size_t p = 0; p < np; ++p)
        if (std::abs(sum[p]) >= 1e-8 * scale[p]) return false;
    return true;
}

VirtualCharacter virtual_character_product(const RootDatum& rd, const VirtualCharacter& x,
                                           const VirtualCharacter& y) {
    VirtualCharacter out;
    for (const auto& [wa, ca] : x) {
        if (ca == 0) continue;
        for (const auto& [wb, cb] : y) {
            if (cb == 0) continue;
            for (const auto& [nu, m] : tensor_decompose(rd, wa, wb)) out[nu] += ca * cb * m;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace verlinde
