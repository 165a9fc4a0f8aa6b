// Command-line front end: exact level-k fusion tables for the simple
// simply-connected types, their real/quaternionic/complex refinements for a
// chosen involution datum, and the associated graded module and ideal data.

#include "verlinde/errors.hpp"
#include "verlinde/json_io.hpp"
#include "verlinde/kr_algebra.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace verlinde;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string cache_dir;
    bool no_cache = false;
    long long max_alcove = 5000;
    long long max_steps = 10000;
    int threads = 1;

    FusionLimits limits() const { return FusionLimits{max_alcove, max_steps}; }
    FusionCache cache() const { return FusionCache{no_cache ? std::string() : cache_dir}; }
};

std::string default_cache_dir() {
    if (const char* env = std::getenv("VERLINDE_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/verlinde";
    return {};
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("failed to parse '" + path + "': " + e.what());
    }
}

RealInvolutionDatum resolve_involution(const RootDatum& rd, const std::string& preset_name,
                                       const std::string& config_path, bool gate) {
    if (!config_path.empty()) {
        RealInvolutionDatum inv = involution_from_json(load_json_file(config_path), rd.rank);
        if (gate) {
            for (const auto& c : validate(inv, rd, 0))
                if (!c.passed)
                    throw input_error("involution config '" + config_path + "' fails check " + c.name +
                                      (c.detail.empty() ? "" : ": " + c.detail));
        }
        return inv;
    }
    return preset(rd, preset_name.empty() ? "trivial_involution" : preset_name);
}

FusionTable obtain_table(const RootDatum& rd, int k, const GlobalOpts& g) {
    FusionCache cache = g.cache();
    std::string warning;
    if (auto hit = cache.load(rd, k, warning)) {
        if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
        return *hit;
    }
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    FusionTable t = build_fusion_table(rd, k, g.limits(), g.threads);
    cache.store(rd, k, t);
    return t;
}

void cmd_describe(const RootDatum& rd, const std::string& json_path) {
    if (!json_path.empty()) {
        write_json(json_path, root_datum_to_json(rd));
        return;
    }
    std::cout << "type " << rd.type.family << rd.rank << "\n"
              << "rank " << rd.rank << "\n"
              << "positive roots " << rd.positive_roots.size() << "\n"
              << "dual Coxeter number " << rd.dual_coxeter << "\n"
              << "highest root " << weight_to_string(rd.alpha_max_weight) << "\n"
              << "rho " << weight_to_string(rd.rho) << "\n"
              << "Weyl group order " << rd.weyl_order.to_string() << "\n";
}

void cmd_fusion(const RootDatum& rd, int k, const GlobalOpts& g, const std::string& json_path,
                const std::string& csv_path) {
    FusionTable t = obtain_table(rd, k, g);
    if (!json_path.empty()) write_json(json_path, fusion_table_to_json(rd, t));
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw input_error("cannot open '" + csv_path + "' for writing");
        out << "l,m,n,c\n";
        for (const auto& [lm, row] : t.coeffs)
            for (const auto& [n, c] : row)
                out << lm.first << "," << lm.second << "," << n << "," << c << "\n";
    }
    if (!json_path.empty() || !csv_path.empty()) return;
    const auto& w = t.weights.weights;
    for (const auto& [lm, row] : t.coeffs) {
        std::cout << weight_to_string(w[lm.first]) << "*" << weight_to_string(w[lm.second]) << " =";
        if (row.empty()) std::cout << " 0";
        bool first = true;
        for (const auto& [n, c] : row) {
            std::cout << (first ? " " : " + ");
            if (c != 1) std::cout << c;
            std::cout << weight_to_string(w[n]);
            first = false;
        }
        std::cout << "\n";
    }
}

void cmd_real(const RootDatum& rd, int k, const RealInvolutionDatum& inv, const GlobalOpts& g,
              const std::string& json_path, const std::string& ik_path) {
    auto checks = validate(inv, rd, k);
    for (const auto& c : checks)
        if (!c.passed)
            throw input_error("involution datum fails check " + c.name +
                              (c.detail.empty() ? "" : ": " + c.detail));

    FusionTable table = obtain_table(rd, k, g);
    auto basis = real_basis(rd, inv, k);
    TypeDecomposition dec = classify(inv, table.weights);

    std::vector<RealIdealGenerator> ideal;
    bool have_ideal = false;
    std::vector<VirtualCharacter> gens;
    if (!ik_path.empty()) {
        json j = load_json_file(ik_path);
        if (!j.is_array()) throw input_error("'" + ik_path + "': expected an array of characters");
        for (const auto& e : j) gens.push_back(virtual_character_from_json(e, rd.rank));
        have_ideal = true;
    } else if (rd.type.family == 'A') {
        gens = builtin_ik_generators(rd, k);
        have_ideal = true;
    }
    if (have_ideal) ideal = real_ideal_generators(gens, inv, rd, k);

    if (!json_path.empty()) {
        write_json(json_path, real_export_json(rd, inv, k, table, basis, dec, ideal, have_ideal));
        return;
    }

    std::cout << "involution " << inv.name << "\n";
    std::cout << "basis (" << basis.size() << " generators):\n";
    for (const auto& b : basis) {
        if (b.kind == RealBasisElement::Kind::Fixed)
            std::cout << "  V'" << weight_to_string(b.weight) << "  degree " << b.degree << "  ("
                      << (b.epsilon > 0 ? "real" : "quaternionic") << ")\n";
        else
            std::cout << "  r(V" << weight_to_string(b.weight) << ")  degree 0  (pair with "
                      << weight_to_string(b.partner) << ")\n";
    }
    std::cout << "rank of RR_k: "
              << dec.fixed_real.size() + dec.fixed_quaternionic.size() + dec.orbit_pairs.size() << "\n";
    std::cout << "products:\n";
    for (size_t i = 0; i < basis.size(); ++i) {
        RKRElement gi = basis[i].kind == RealBasisElement::Kind::Fixed ? rkr_fixed(basis[i].weight)
                                                                       : rkr_orbit(inv, basis[i].weight);
        for (size_t l = i; l < basis.size(); ++l) {
            RKRElement gl = basis[l].kind == RealBasisElement::Kind::Fixed
                                ? rkr_fixed(basis[l].weight)
                                : rkr_orbit(inv, basis[l].weight);
            RKRElement prod = multiply(gi, gl, table, inv);
            std::cout << "  [" << i << "]*[" << l << "] = " << prod.render() << "\n";
        }
    }
    if (have_ideal) {
        std::cout << "Real Verlinde ideal generators (" << ideal.size() << "):\n";
        for (const auto& gen : ideal) {
            switch (gen.kind) {
            case RealIdealGenerator::Kind::CInv:
                std::cout << "  c^-1(rho)";
                break;
            case RealIdealGenerator::Kind::CInvPair:
                std::cout << "  c^-1(rho*tau + conj)";
                break;
            case RealIdealGenerator::Kind::RGen:
                std::cout << "  r(rho*chi (x) beta^" << gen.beta_power << ")";
                break;
            }
            std::cout << "  rho hw=";
            std::cout << weight_to_string(gen.rho.begin()->first);
            if (!gen.monomial.empty()) {
                std::cout << " monomial=";
                for (size_t t = 0; t < gen.monomial.size(); ++t)
                    std::cout << (t ? "*" : "") << "w" << gen.monomial[t] + 1;
            }
            std::cout << "\n";
        }
    } else {
        std::cout << "no built-in ideal generators for family " << rd.type.family
                  << "; pass --ik-gens\n";
    }
}

int cmd_validate(const RootDatum& rd, int kmax, const RealInvolutionDatum& inv, int fusion_level,
                 const GlobalOpts& g) {
    bool ok = true;
    for (const auto& c : validate(inv, rd, kmax)) {
        std::cout << (c.passed ? "ok  " : "FAIL") << "  " << c.name
                  << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        ok = ok && c.passed;
    }
    if (fusion_level >= 0) {
        try {
            auto wts = level_weights(rd, fusion_level);
            auto S = s_matrix(rd, fusion_level, g.limits());
            bool agree = true;
            for (size_t i = 0; i < wts.weights.size() && agree; ++i)
                for (size_t j = i; j < wts.weights.size() && agree; ++j) {
                    auto exact = fusion_coeffs(rd, fusion_level, wts.weights[i], wts.weights[j],
                                               g.limits());
                    auto oracle =
                        fusion_via_smatrix(rd, fusion_level, S, wts, wts.weights[i], wts.weights[j]);
                    agree = exact == oracle;
                }
            std::cout << (agree ? "ok  " : "FAIL") << "  fusion_cross_method (level " << fusion_level
                      << ")\n";
            ok = ok && agree;
        } catch (const std::exception& e) {
            std::cout << "FAIL  fusion_cross_method (" << e.what() << ")\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Verlinde fusion algebras and their Real refinements"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    g.cache_dir = default_cache_dir();
    app.add_option("--cache-dir", g.cache_dir, "fusion table cache directory");
    app.add_flag("--no-cache", g.no_cache, "disable the fusion table cache");
    app.add_option("--max-alcove", g.max_alcove,
                   "guard on |level-k weights| for tables and S-matrices (risk: memory/time)");
    app.add_option("--max-steps", g.max_steps,
                   "guard on affine reflection steps per constituent (risk: non-termination)");
    app.add_option("--threads", g.threads, "worker threads for fusion table fill");

    std::string family = "A";
    int rank = 1, level = 0, kmax = 4, fusion_level = -2;
    std::string preset_name, involution_path, json_path, csv_path, ik_path;
    long long vr = 0, vs = 0, vp = 0, vq = 0;

    auto add_type_opts = [&](CLI::App* c) {
        c->add_option("--family", family, "Cartan family A..G")->required();
        c->add_option("--rank", rank, "rank")->required();
    };

    CLI::App* c_desc = app.add_subcommand("describe", "print the root datum");
    add_type_opts(c_desc);
    c_desc->add_option("--json", json_path, "write JSON to this path");

    CLI::App* c_fus = app.add_subcommand("fusion", "compute the level-k fusion table");
    add_type_opts(c_fus);
    c_fus->add_option("--level", level, "level k >= 0")->required();
    c_fus->add_option("--json", json_path, "write the table as JSON");
    c_fus->add_option("--csv", csv_path, "write the table as CSV");

    CLI::App* c_real = app.add_subcommand("real", "basis, type decomposition, products, ideal");
    add_type_opts(c_real);
    c_real->add_option("--level", level, "level k >= 0")->required();
    c_real->add_option("--preset", preset_name, "trivial_involution | su_even_quaternionic");
    c_real->add_option("--involution", involution_path, "involution config file (JSON)");
    c_real->add_option("--ik-gens", ik_path, "Verlinde ideal generators (JSON array of characters)");
    c_real->add_option("--json", json_path, "write everything as JSON");

    CLI::App* c_val = app.add_subcommand("validate", "involution diagnostics + fusion cross-check");
    add_type_opts(c_val);
    c_val->add_option("--kmax", kmax, "check level sets up to this level");
    c_val->add_option("--preset", preset_name, "trivial_involution | su_even_quaternionic");
    c_val->add_option("--involution", involution_path, "involution config file (JSON)");
    c_val->add_option("--fusion-level", fusion_level,
                      "cross-check fusion methods at this level (-1 disables; default min(kmax,2))");

    CLI::App* c_spin = app.add_subcommand("spinc", "Real (p,q)-Spin^c classifier for R^{r,s}");
    c_spin->add_option("--r", vr)->required();
    c_spin->add_option("--s", vs)->required();
    c_spin->add_option("--p", vp)->required();
    c_spin->add_option("--q", vq)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 1;
    }

    try {
        if (c_spin->parsed()) {
            std::cout << to_string(spin_c_classify(vr, vs, vp, vq)) << "\n";
            return 0;
        }
        RootDatum rd = build_root_datum(parse_cartan_type(family, rank));
        if (c_desc->parsed()) {
            cmd_describe(rd, json_path);
        } else if (c_fus->parsed()) {
            if (level < 0) throw input_error("level must be >= 0");
            cmd_fusion(rd, level, g, json_path, csv_path);
        } else if (c_real->parsed()) {
            if (level < 0) throw input_error("level must be >= 0");
            RealInvolutionDatum inv = resolve_involution(rd, preset_name, involution_path, true);
            cmd_real(rd, level, inv, g, json_path, ik_path);
        } else if (c_val->parsed()) {
            RealInvolutionDatum inv = resolve_involution(rd, preset_name, involution_path, false);
            if (fusion_level == -2) fusion_level = std::min(kmax, 2);
            return cmd_validate(rd, kmax, inv, fusion_level, g);
        }
        return 0;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "numeric consistency error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
