#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bichar/bicharacter.hpp"
#include "bichar/hopf.hpp"
#include "bichar/lattice.hpp"

namespace bichar::cli {

enum class CoefficientRing { rationals, polynomials, laurent };

/// Everything a command needs from --config.
struct SessionConfig {
    AlgebraSignature signature = AlgebraSignature::plain(0);
    CoefficientRing ring = CoefficientRing::laurent;
    std::optional<std::size_t> num_primitives;
    std::map<std::string, BicharSpec> bicharacters;
    std::optional<Lattice> lattice;
    std::optional<unsigned> series_order;

    /// Throws ConfigError if `c` does not lie in the session's coefficient ring.
    void check_coefficient(const LaurentPoly& c, const std::string& where) const;
    void check_element(const HopfElement& a) const;
    /// Named bicharacter; an empty name picks "r" or the only one defined.
    const BicharSpec& bicharacter(const std::string& name) const;
};

/// TOML unless the path ends in ".json".
SessionConfig load_config(const std::string& path);
SessionConfig parse_config(std::string_view text, bool is_json);
SessionConfig parse_config(const nlohmann::json& doc);

}  // namespace bichar::cli
