#include "verlinde/json_io.hpp"

#include "verlinde/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace verlinde {

using nlohmann::json;

nlohmann::json root_datum_to_json(const RootDatum& rd) {
    json j;
    j["convention"] = "Bourbaki simple-root numbering; cartan_matrix[i][j] = <alpha_j, alpha_i-check>; "
                      "positive roots in root-basis coordinates, sorted by height then "
                      "lexicographically; B normalized so B(alpha_max, alpha_max) = 2";
    j["family"] = std::string(1, rd.type.family);
    j["rank"] = rd.rank;
    j["cartan_matrix"] = rd.cartan;
    j["positive_roots"] = rd.positive_roots;
    std::vector<std::vector<std::string>> gram;
    for (const auto& row : rd.gram) {
        std::vector<std::string> r;
        for (const auto& v : row) r.push_back(v.to_string());
        gram.push_back(std::move(r));
    }
    j["gram_B"] = gram;
    j["dual_coxeter"] = rd.dual_coxeter;
    return j;
}

nlohmann::json fusion_table_to_json(const RootDatum& rd, const FusionTable& t) {
    json j;
    j["schema"] = kFusionSchemaVersion;
    j["type"] = std::string(1, rd.type.family);
    j["rank"] = rd.rank;
    j["level"] = t.level;
    j["weights"] = t.weights.weights;
    json coeffs = json::array();
    for (const auto& [lm, row] : t.coeffs) {
        json entry;
        entry["l"] = lm.first;
        entry["m"] = lm.second;
        json entries = json::array();
        for (const auto& [n, c] : row) entries.push_back(json{{"c", c}, {"n", n}});
        entry["entries"] = entries;
        coeffs.push_back(entry);
    }
    j["coeffs"] = coeffs;
    return j;
}

FusionTable fusion_table_from_json(const RootDatum& rd, const nlohmann::json& j) {
    if (!j.is_object()) throw input_error("fusion table json: not an object");
    if (j.value("schema", -1) != kFusionSchemaVersion)
        throw input_error("fusion table json: unsupported schema version");
    if (j.value("type", std::string()) != std::string(1, rd.type.family) ||
        j.value("rank", -1) != rd.rank)
        throw input_error("fusion table json: type mismatch");
    FusionTable t;
    t.level = j.at("level").get<int>();
    t.weights.level = t.level;
    for (const auto& w : j.at("weights")) {
        Weight wt = w.get<Weight>();
        if (static_cast<int>(wt.size()) != rd.rank) throw input_error("fusion table json: bad weight");
        t.weights.weights.push_back(std::move(wt));
    }
    const long long n = static_cast<long long>(t.weights.weights.size());
    for (const auto& e : j.at("coeffs")) {
        int l = e.at("l").get<int>();
        int m = e.at("m").get<int>();
        if (l < 0 || m < l || m >= n) throw input_error("fusion table json: bad pair index");
        std::map<int, long long> row;
        for (const auto& ent : e.at("entries")) {
            int nu = ent.at("n").get<int>();
            if (nu < 0 || nu >= n) throw input_error("fusion table json: bad weight index");
            row[nu] = ent.at("c").get<long long>();
        }
        t.coeffs[{l, m}] = std::move(row);
    }
    return t;
}

nlohmann::json virtual_character_to_json(const VirtualCharacter& vc) {
    json arr = json::array();
    for (const auto& [w, c] : vc) arr.push_back(json{{"coeff", c}, {"weight", w}});
    return arr;
}

VirtualCharacter virtual_character_from_json(const nlohmann::json& j, int rank) {
    if (!j.is_array()) throw input_error("virtual character json: expected an array");
    VirtualCharacter out;
    for (const auto& t : j) {
        Weight w = t.at("weight").get<Weight>();
        if (static_cast<int>(w.size()) != rank) throw input_error("virtual character json: bad weight length");
        out[w] += t.at("coeff").get<long long>();
    }
    return out;
}

RealInvolutionDatum involution_from_json(const nlohmann::json& j, int rank) {
    if (!j.is_object()) throw input_error("involution config: not a json object");
    RealInvolutionDatum inv;
    inv.name = j.value("name", std::string("custom"));
    if (!j.contains("permutation"))
        throw input_error("involution config: missing field 'permutation'");
    for (const auto& v : j.at("permutation")) {
        int idx = v.get<int>();
        if (idx < 1 || idx > rank)
            throw input_error("involution config: permutation entry " + std::to_string(idx) +
                              " out of range 1.." + std::to_string(rank));
        inv.sigma.push_back(idx - 1);
    }
    if (static_cast<int>(inv.sigma.size()) != rank)
        throw input_error("involution config: permutation length differs from the rank");
    if (!j.contains("epsilon")) throw input_error("involution config: missing field 'epsilon'");
    const json& eps = j.at("epsilon");
    if (eps.contains("coweight")) {
        inv.epsilon_from_coweight = true;
        for (const auto& v : eps.at("coweight")) inv.coweight.push_back(v.get<long long>());
        if (static_cast<int>(inv.coweight.size()) != rank)
            throw input_error("involution config: epsilon.coweight length differs from the rank");
    } else if (eps.contains("table")) {
        inv.epsilon_from_coweight = false;
        for (const auto& [key, val] : eps.at("table").items()) {
            int v = val.get<int>();
            if (v != 1 && v != -1)
                throw input_error("involution config: epsilon.table['" + key + "'] must be +-1");
            inv.table[key] = v;
        }
    } else {
        throw input_error("involution config: epsilon needs 'coweight' or 'table'");
    }
    return inv;
}

nlohmann::json involution_to_json(const RealInvolutionDatum& inv) {
    json j;
    j["name"] = inv.name;
    std::vector<int> perm;
    for (int v : inv.sigma) perm.push_back(v + 1);
    j["permutation"] = perm;
    if (inv.epsilon_from_coweight)
        j["epsilon"] = json{{"coweight", inv.coweight}};
    else
        j["epsilon"] = json{{"table", inv.table}};
    return j;
}

namespace {

json rkr_to_json(const RKRElement& x) {
    json j;
    json fixed = json::array();
    for (const auto& [w, c] : x.fixed) fixed.push_back(json{{"coeff", c.render()}, {"weight", w}});
    json orbit = json::array();
    for (const auto& [w, c] : x.orbit) orbit.push_back(json{{"coeff", c.render()}, {"weight", w}});
    j["fixed"] = fixed;
    j["orbit"] = orbit;
    return j;
}

std::string monomial_string(const std::vector<int>& m) {
    if (m.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "*";
        s += "w" + std::to_string(m[i] + 1);
    }
    return s;
}

} // namespace

nlohmann::json real_export_json(const RootDatum& rd, const RealInvolutionDatum& inv, int k,
                                const FusionTable& table, const std::vector<RealBasisElement>& basis,
                                const TypeDecomposition& dec,
                                const std::vector<RealIdealGenerator>& ideal, bool have_ideal) {
    json j;
    j["type"] = std::string(1, rd.type.family);
    j["rank"] = rd.rank;
    j["level"] = k;
    j["involution"] = involution_to_json(inv);

    json jb = json::array();
    for (const auto& b : basis) {
        json e;
        if (b.kind == RealBasisElement::Kind::Fixed) {
            e["kind"] = "fixed";
            e["weight"] = b.weight;
            e["epsilon"] = b.epsilon;
        } else {
            e["kind"] = "pair";
            e["weight"] = b.weight;
            e["partner"] = b.partner;
        }
        e["degree"] = b.degree;
        jb.push_back(e);
    }
    j["basis"] = jb;

    json jd;
    jd["real"] = dec.fixed_real;
    jd["quaternionic"] = dec.fixed_quaternionic;
    json pairs = json::array();
    for (const auto& [a, b] : dec.orbit_pairs) pairs.push_back(json{{"partner", b}, {"rep", a}});
    jd["pairs"] = pairs;
    j["decomposition"] = jd;
    j["rank_rr"] = static_cast<long long>(dec.fixed_real.size() + dec.fixed_quaternionic.size() +
                                          dec.orbit_pairs.size());

    json prods = json::array();
    for (size_t i = 0; i < basis.size(); ++i) {
        RKRElement gi = basis[i].kind == RealBasisElement::Kind::Fixed
                            ? rkr_fixed(basis[i].weight)
                            : rkr_orbit(inv, basis[i].weight);
        for (size_t l = i; l < basis.size(); ++l) {
            RKRElement gl = basis[l].kind == RealBasisElement::Kind::Fixed
                                ? rkr_fixed(basis[l].weight)
                                : rkr_orbit(inv, basis[l].weight);
            RKRElement prod = multiply(gi, gl, table, inv);
            prods.push_back(json{{"i", i}, {"j", l}, {"product", rkr_to_json(prod)}});
        }
    }
    j["products"] = prods;

    if (have_ideal) {
        json ji = json::array();
        for (const auto& g : ideal) {
            json e;
            switch (g.kind) {
            case RealIdealGenerator::Kind::CInv: e["tag"] = "cinv"; break;
            case RealIdealGenerator::Kind::CInvPair: e["tag"] = "cinv_pair"; break;
            case RealIdealGenerator::Kind::RGen: e["tag"] = "r_gen"; break;
            }
            e["rho"] = virtual_character_to_json(g.rho);
            if (g.kind != RealIdealGenerator::Kind::CInv) e["monomial"] = monomial_string(g.monomial);
            if (g.kind == RealIdealGenerator::Kind::RGen) e["beta"] = g.beta_power;
            e["payload"] = virtual_character_to_json(g.payload);
            ji.push_back(e);
        }
        j["ideal"] = ji;
    }
    return j;
}

std::string fnv1a64_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string FusionCache::entry_path(const RootDatum& rd, int k) const {
    std::ostringstream os;
    os << dir << "/fusion_" << rd.type.family << rd.rank << "_k" << k << "_v" << kFusionSchemaVersion
       << ".json";
    return os.str();
}

std::optional<FusionTable> FusionCache::load(const RootDatum& rd, int k, std::string& warning) const {
    warning.clear();
    if (dir.empty()) return std::nullopt;
    std::ifstream in(entry_path(rd, k));
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        const json& key = j.at("key");
        if (key.at("family").get<std::string>() != std::string(1, rd.type.family) ||
            key.at("rank").get<int>() != rd.rank || key.at("level").get<int>() != k ||
            key.at("schema").get<int>() != kFusionSchemaVersion) {
            warning = "cache entry key mismatch; recomputing";
            return std::nullopt;
        }
        std::string payload = j.at("payload").dump();
        if (fnv1a64_hex(payload) != j.at("checksum").get<std::string>()) {
            warning = "cache entry failed its checksum; recomputing";
            return std::nullopt;
        }
        return fusion_table_from_json(rd, j.at("payload"));
    } catch (const std::exception& e) {
        warning = std::string("unreadable cache entry (") + e.what() + "); recomputing";
        return std::nullopt;
    }
}

void FusionCache::store(const RootDatum& rd, int k, const FusionTable& t) const {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    json payload = fusion_table_to_json(rd, t);
    json j;
    j["key"] = json{{"family", std::string(1, rd.type.family)},
                    {"rank", rd.rank},
                    {"level", k},
                    {"schema", kFusionSchemaVersion}};
    j["payload"] = payload;
    j["checksum"] = fnv1a64_hex(payload.dump());
    std::ofstream out(entry_path(rd, k));
    out << j.dump(2) << "\n";
}

} // namespace verlinde
