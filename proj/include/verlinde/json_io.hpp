#pragma once

#include "verlinde/fusion_ring.hpp"
#include "verlinde/real_structure.hpp"
#include "verlinde/real_verlinde.hpp"
#include "verlinde/root_system.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace verlinde {

inline constexpr int kFusionSchemaVersion = 1;

nlohmann::json root_datum_to_json(const RootDatum& rd);

nlohmann::json fusion_table_to_json(const RootDatum& rd, const FusionTable& t);
FusionTable fusion_table_from_json(const RootDatum& rd, const nlohmann::json& j);

nlohmann::json virtual_character_to_json(const VirtualCharacter& vc);
VirtualCharacter virtual_character_from_json(const nlohmann::json& j, int rank);

// Involution config file: {"name": ..., "permutation": [1-based...],
// "epsilon": {"coweight": [...]} or {"table": {"1": -1, "2+3": 1, ...}}}.
RealInvolutionDatum involution_from_json(const nlohmann::json& j, int rank);
nlohmann::json involution_to_json(const RealInvolutionDatum& inv);

nlohmann::json real_export_json(const RootDatum& rd, const RealInvolutionDatum& inv, int k,
                                const FusionTable& table, const std::vector<RealBasisElement>& basis,
                                const TypeDecomposition& dec,
                                const std::vector<RealIdealGenerator>& ideal, bool have_ideal);

// FNV-1a 64-bit, hex encoded; content checksum for cache entries.
std::string fnv1a64_hex(const std::string& data);

struct FusionCache {
    std::string dir; // empty disables caching

    std::string entry_path(const RootDatum& rd, int k) const;
    // nullopt on miss; warning is set (and the miss returned) on a corrupt
    // or stale entry.
    std::optional<FusionTable> load(const RootDatum& rd, int k, std::string& warning) const;
    void store(const RootDatum& rd, int k, const FusionTable& t) const;
};

} // namespace verlinde
