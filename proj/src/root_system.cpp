#include "verlinde/root_system.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace verlinde {

namespace {

constexpr int kMaxReflectionSteps = 100000;

bool valid_rank(char family, int rank) {
    switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

// Edges of the Dynkin diagram, Bourbaki numbering (0-based pairs).
std::vector<std::pair<int, int>> diagram_edges(char family, int l) {
    std::vector<std::pair<int, int>> e;
    switch (family) {
    case 'A':
    case 'B':
    case 'C':
        for (int i = 0; i + 1 < l; ++i) e.push_back({i, i + 1});
        break;
    case 'D':
        for (int i = 0; i + 1 < l - 1; ++i) e.push_back({i, i + 1});
        e.push_back({l - 3, l - 1});
        break;
    case 'E':
        e = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        if (l >= 7) e.push_back({5, 6});
        if (l >= 8) e.push_back({6, 7});
        break;
    case 'F':
        e = {{0, 1}, {1, 2}, {2, 3}};
        break;
    case 'G':
        e = {{0, 1}};
        break;
    }
    return e;
}

// Symmetrizers d_i = B(alpha_i,alpha_i)/2, normalized so long roots have d=1.
std::vector<Rational> symmetrizers(char family, int l) {
    std::vector<Rational> d(l, Rational(1));
    switch (family) {
    case 'B':
        d[l - 1] = Rational(1, 2);
        break;
    case 'C':
        for (int i = 0; i + 1 < l; ++i) d[i] = Rational(1, 2);
        break;
    case 'F':
        d[2] = Rational(1, 2);
        d[3] = Rational(1, 2);
        break;
    case 'G':
        d[0] = Rational(1, 3);
        break;
    default:
        break;
    }
    return d;
}

std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<int>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
        m[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw numeric_error("Cartan matrix is singular");
        std::swap(m[col], m[pivot]);
        Rational p = m[col][col];
        for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

long long expected_positive_roots(char family, int l) {
    switch (family) {
    case 'A': return static_cast<long long>(l) * (l + 1) / 2;
    case 'B':
    case 'C': return static_cast<long long>(l) * l;
    case 'D': return static_cast<long long>(l) * (l - 1);
    case 'E': return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    }
    return -1;
}

BigInt weyl_group_order(char family, int l) {
    auto fact = [](int n) {
        BigInt f(1);
        for (int i = 2; i <= n; ++i) f *= BigInt(i);
        return f;
    };
    auto pow2 = [](int n) {
        BigInt p(1);
        for (int i = 0; i < n; ++i) p *= BigInt(2);
        return p;
    };
    switch (family) {
    case 'A': return fact(l + 1);
    case 'B':
    case 'C': return pow2(l) * fact(l);
    case 'D': return pow2(l - 1) * fact(l);
    case 'E': return l == 6 ? BigInt(51840) : (l == 7 ? BigInt(2903040) : BigInt(696729600));
    case 'F': return BigInt(1152);
    case 'G': return BigInt(12);
    }
    return BigInt(0);
}

} // namespace

CartanType parse_cartan_type(const std::string& family, int rank) {
    if (family.size() != 1) throw input_error("unknown family '" + family + "'");
    char f = family[0];
    if (!valid_rank(f, rank)) {
        std::ostringstream os;
        os << "invalid rank " << rank << " for family " << f;
        throw input_error(os.str());
    }
    return CartanType{f, rank};
}

bool RootDatum::is_dominant(const Weight& w) const {
    for (int x : w)
        if (x < 0) return false;
    return true;
}

long long RootDatum::level_of(const Weight& w) const {
    long long lv = 0;
    for (int i = 0; i < rank; ++i) lv += comarks[i] * w[i];
    return lv;
}

RootDatum build_root_datum(CartanType type) {
    if (!valid_rank(type.family, type.rank)) {
        std::ostringstream os;
        os << "invalid rank " << type.rank << " for family " << type.family;
        throw input_error(os.str());
    }
    RootDatum rd;
    rd.type = type;
    int l = rd.rank = type.rank;

    rd.d = symmetrizers(type.family, l);
    rd.cartan.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) rd.cartan[i][i] = 2;
    for (auto [i, j] : diagram_edges(type.family, l)) {
        // A[i][j] = <alpha_j, alpha_i^vee> = B(alpha_i, alpha_j)/d_i, with
        // B(alpha_i, alpha_j) = -max(d_i, d_j) on an edge of the diagram.
        Rational bij = -std::max(rd.d[i], rd.d[j]);
        Rational aij = bij / rd.d[i];
        Rational aji = bij / rd.d[j];
        rd.cartan[i][j] = static_cast<int>(aij.to_integer().to_longlong());
        rd.cartan[j][i] = static_cast<int>(aji.to_integer().to_longlong());
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (rd.d[i] * Rational(rd.cartan[i][j]) != rd.d[j] * Rational(rd.cartan[j][i]))
                throw numeric_error("Cartan matrix not symmetrizable (internal)");

    // Positive roots: close the simple roots under simple reflections,
    // keeping vectors that stay non-negative in the root basis.
    auto labels_of = [&](const std::vector<int>& c) {
        Weight w(l, 0);
        for (int i = 0; i < l; ++i) {
            int s = 0;
            for (int j = 0; j < l; ++j) s += rd.cartan[i][j] * c[j];
            w[i] = s;
        }
        return w;
    };
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < l; ++i) {
        std::vector<int> e(l, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> c = queue.front();
        queue.pop_front();
        Weight lab = labels_of(c);
        for (int i = 0; i < l; ++i) {
            std::vector<int> c2 = c;
            c2[i] -= lab[i];
            bool nonneg = true, nonzero = false;
            for (int x : c2) {
                if (x < 0) nonneg = false;
                if (x != 0) nonzero = true;
            }
            if (nonneg && nonzero && seen.insert(c2).second) queue.push_back(c2);
        }
    }
    rd.positive_roots.assign(seen.begin(), seen.end());
    auto height = [](const std::vector<int>& c) {
        long long h = 0;
        for (int x : c) h += x;
        return h;
    };
    std::sort(rd.positive_roots.begin(), rd.positive_roots.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  long long ha = height(a), hb = height(b);
                  if (ha != hb) return ha < hb;
                  return a < b;
              });
    if (static_cast<long long>(rd.positive_roots.size()) != expected_positive_roots(type.family, l))
        throw numeric_error("positive root count mismatch (internal)");

    for (const auto& c : rd.positive_roots) {
        rd.positive_roots_weight.push_back(labels_of(c));
        Rational n2(0);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                if (c[i] && c[j]) n2 += Rational(c[i]) * Rational(c[j]) * rd.d[i] * Rational(rd.cartan[i][j]);
        rd.positive_root_halfnorm.push_back(n2 / Rational(2));
    }

    rd.alpha_max = rd.positive_roots.back();
    if (rd.positive_roots.size() >= 2 &&
        height(rd.alpha_max) == height(rd.positive_roots[rd.positive_roots.size() - 2]))
        throw numeric_error("highest root is not unique (internal)");
    rd.alpha_max_weight = rd.positive_roots_weight.back();
    if (rd.positive_root_halfnorm.back() != Rational(1))
        throw numeric_error("B(alpha_max, alpha_max) != 2 (internal)");

    rd.rho.assign(l, 1);
    rd.inv_cartan = invert_matrix(rd.cartan);
    rd.gram.assign(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) rd.gram[i][j] = rd.d[i] * rd.inv_cartan[i][j];
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (rd.gram[i][j] != rd.gram[j][i]) throw numeric_error("Gram matrix asymmetric (internal)");

    // comark_i = <omega_i, alpha_max^vee> = B(omega_i, alpha_max)
    rd.comarks.resize(l);
    for (int i = 0; i < l; ++i) {
        Rational cm = Rational(rd.alpha_max[i]) * rd.d[i];
        rd.comarks[i] = cm.to_integer().to_longlong();
    }

    Rational hv = Rational(1);
    for (int i = 0; i < l; ++i) hv += Rational(rd.alpha_max[i]) * rd.d[i]; // B(rho, alpha_max)
    rd.dual_coxeter = hv.to_integer().to_longlong();

    rd.weyl_order = weyl_group_order(type.family, l);
    return rd;
}

Rational inner_product(const RootDatum& rd, const Weight& a, const Weight& b) {
    if (static_cast<int>(a.size()) != rd.rank || static_cast<int>(b.size()) != rd.rank)
        throw input_error("inner_product: rank mismatch");
    Rational out(0);
    for (int i = 0; i < rd.rank; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < rd.rank; ++j)
            if (b[j]) out += Rational(a[i]) * Rational(b[j]) * rd.gram[i][j];
    }
    return out;
}

Rational inner_product_with_root(const RootDatum& rd, const Weight& w, int root_index) {
    // B(w, alpha) = sum_j m_j(alpha) d_j w_j
    const auto& c = rd.positive_roots[root_index];
    Rational out(0);
    for (int j = 0; j < rd.rank; ++j)
        if (c[j] && w[j]) out += Rational(c[j]) * rd.d[j] * Rational(w[j]);
    return out;
}

std::pair<Weight, int> dominant_reduce_shifted(const RootDatum& rd, Weight xi) {
    if (static_cast<int>(xi.size()) != rd.rank) throw input_error("dominant_reduce: rank mismatch");
    int sign = 1;
    for (int step = 0; step < kMaxReflectionSteps; ++step) {
        int neg = -1;
        for (int i = 0; i < rd.rank; ++i)
            if (xi[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) {
            for (int x : xi)
                if (x == 0) return {xi, 0};
            return {xi, sign};
        }
        int v = xi[neg];
        for (int j = 0; j < rd.rank; ++j) xi[j] -= v * rd.cartan[j][neg];
        sign = -sign;
    }
    throw numeric_error("dominant_reduce_shifted: reflection guard exceeded");
}

Weight dominant_representative(const RootDatum& rd, Weight xi) {
    for (int step = 0; step < kMaxReflectionSteps; ++step) {
        int neg = -1;
        for (int i = 0; i < rd.rank; ++i)
            if (xi[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return xi;
        int v = xi[neg];
        for (int j = 0; j < rd.rank; ++j) xi[j] -= v * rd.cartan[j][neg];
    }
    throw numeric_error("dominant_representative: reflection guard exceeded");
}

Weight dual_weight(const RootDatum& rd, const Weight& w) {
    Weight neg(w.size());
    for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    return dominant_representative(rd, neg);
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& dominant) {
    std::set<Weight> seen{dominant};
    std::deque<Weight> queue{dominant};
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (int i = 0; i < rd.rank; ++i) {
            if (w[i] == 0) continue;
            Weight w2 = w;
            int v = w[i];
            for (int j = 0; j < rd.rank; ++j) w2[j] -= v * rd.cartan[j][i];
            if (seen.insert(w2).second) queue.push_back(w2);
        }
    }
    return {seen.begin(), seen.end()};
}

std::map<Weight, int> weyl_orbit_signed(const RootDatum& rd, const Weight& regular_dominant) {
    for (int x : regular_dominant)
        if (x == 0) throw input_error("weyl_orbit_signed: weight is not regular");
    std::map<Weight, int> out{{regular_dominant, 1}};
    std::deque<Weight> queue{regular_dominant};
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        int s = out[w];
        for (int i = 0; i < rd.rank; ++i) {
            Weight w2 = w;
            int v = w[i];
            for (int j = 0; j < rd.rank; ++j) w2[j] -= v * rd.cartan[j][i];
            if (out.emplace(w2, -s).second) queue.push_back(w2);
        }
    }
    return out;
}

BigInt weyl_dimension(const RootDatum& rd, const Weight& lambda) {
    if (!rd.is_dominant(lambda)) throw input_error("weyl_dimension: weight not dominant");
    Weight lr(rd.rank);
    for (int i = 0; i < rd.rank; ++i) lr[i] = lambda[i] + 1;
    Rational dim(1);
    for (size_t a = 0; a < rd.positive_roots.size(); ++a)
        dim *= inner_product_with_root(rd, lr, static_cast<int>(a)) /
               inner_product_with_root(rd, rd.rho, static_cast<int>(a));
    return dim.to_integer();
}

std::map<Weight, long long> dominant_weight_multiplicities(const RootDatum& rd, const Weight& lambda) {
    if (!rd.is_dominant(lambda)) throw input_error("weight_multiplicities: weight not dominant");
    BigInt dim = weyl_dimension(rd, lambda);
    if (dim > BigInt(5000000)) throw resource_error("weight diagram too large");

    Weight lr(rd.rank);
    for (int i = 0; i < rd.rank; ++i) lr[i] = lambda[i] + 1;
    const Rational norm_top = inner_product(rd, lr, lr);
    const Rational norm_lambda = inner_product(rd, lambda, lambda);

    auto shifted_norm = [&](const Weight& w) {
        Weight s(rd.rank);
        for (int i = 0; i < rd.rank; ++i) s[i] = w[i] + 1;
        return inner_product(rd, s, s);
    };

    // Exact diagram membership: nu is a weight of V_lambda iff its dominant
    // representative lies below lambda in the root order. lambda - nu stays in
    // the root lattice along the BFS, so the coordinates are integers.
    auto in_diagram = [&](const Weight& nu) {
        Weight rep = dominant_representative(rd, nu);
        for (int i = 0; i < rd.rank; ++i) {
            Rational ci(0);
            for (int j = 0; j < rd.rank; ++j)
                if (lambda[j] != rep[j]) ci += rd.inv_cartan[i][j] * Rational(lambda[j] - rep[j]);
            if (ci < Rational(0)) return false;
        }
        return true;
    };

    // The diagram is connected under simple-root subtraction.
    std::set<Weight> ball{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (int i = 0; i < rd.rank; ++i) {
            Weight w2 = w;
            for (int j = 0; j < rd.rank; ++j) w2[j] -= rd.cartan[j][i];
            if (ball.count(w2)) continue;
            if (in_diagram(w2)) {
                ball.insert(w2);
                queue.push_back(w2);
            }
        }
    }

    std::vector<Weight> dominants;
    for (const auto& w : ball)
        if (rd.is_dominant(w)) dominants.push_back(w);
    std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
        return shifted_norm(b) < shifted_norm(a);
    });

    std::map<Weight, long long> mult;
    mult[lambda] = 1;
    for (const auto& mu : dominants) {
        if (mu == lambda) continue;
        Rational denom = norm_top - shifted_norm(mu);
        Rational rhs(0);
        Rational norm_mu = inner_product(rd, mu, mu);
        for (size_t a = 0; a < rd.positive_roots.size(); ++a) {
            const Weight& alpha = rd.positive_roots_weight[a];
            // |mu + j alpha|^2 is increasing in j (mu dominant, alpha positive),
            // and every weight of the diagram satisfies |nu| <= |lambda|.
            const Rational a2 = rd.positive_root_halfnorm[a] * Rational(2);
            const Rational b2 = inner_product_with_root(rd, mu, static_cast<int>(a)) * Rational(2);
            Weight xi = mu;
            for (long long j = 1;; ++j) {
                Rational norm_xi = norm_mu + Rational(j) * b2 + Rational(j) * Rational(j) * a2;
                if (norm_xi > norm_lambda) break;
                for (int t = 0; t < rd.rank; ++t) xi[t] += alpha[t];
                Weight rep = dominant_representative(rd, xi);
                auto it = mult.find(rep);
                if (it == mult.end() || it->second == 0) continue;
                rhs += Rational(it->second) * inner_product_with_root(rd, xi, static_cast<int>(a));
            }
        }
        Rational m = Rational(2) * rhs / denom;
        BigInt mi = m.to_integer();
        long long v = mi.to_longlong();
        if (v < 0) throw numeric_error("Freudenthal produced a negative multiplicity (internal)");
        if (v > 0) mult[mu] = v;
    }
    std::map<Weight, long long> out;
    for (auto& [w, m] : mult)
        if (m > 0) out[w] = m;
    return out;
}

std::map<Weight, long long> weight_multiplicities(const RootDatum& rd, const Weight& lambda) {
    std::map<Weight, long long> out;
    for (const auto& [mu, m] : dominant_weight_multiplicities(rd, lambda))
        for (const auto& w : weyl_orbit(rd, mu)) out[w] = m;
    return out;
}

std::string weight_to_string(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    s += ")";
    return s;
}

} // namespace verlinde
