#include "config.hpp"

#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "bichar/error.hpp"
#include "bichar/format.hpp"

namespace bichar::cli {

namespace {

using nlohmann::json;

Error config_error(const std::string& msg) { return Error(ErrorKind::config_error, "ConfigError: " + msg); }

json from_toml(const toml::node& node) {
    if (const auto* t = node.as_table()) {
        json out = json::object();
        for (auto&& [k, v] : *t) out[std::string(k.str())] = from_toml(v);
        return out;
    }
    if (const auto* a = node.as_array()) {
        json out = json::array();
        for (auto&& v : *a) out.push_back(from_toml(v));
        return out;
    }
    if (const auto* s = node.as_string()) return s->get();
    if (const auto* i = node.as_integer()) return i->get();
    if (const auto* b = node.as_boolean()) return b->get();
    if (node.as_floating_point())
        throw config_error("floating point value at line " + std::to_string(node.source().begin.line) +
                           "; write rationals as strings such as \"1/2\"");
    throw config_error("unsupported TOML value at line " + std::to_string(node.source().begin.line));
}

Rational rational_of(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw config_error(where + ": expected an integer or a rational string");
}

LaurentPoly laurent_of(const json& v, const std::string& where) {
    if (v.is_number_integer()) return LaurentPoly(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return parse_laurent(v.get<std::string>());
    throw config_error(where + ": expected an integer or a coefficient string");
}

std::size_t count_of(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw config_error(where + ": expected a non-negative integer");
    return static_cast<std::size_t>(v.get<std::int64_t>());
}

std::vector<std::vector<Rational>> matrix_of(const json& v, const std::string& where) {
    if (!v.is_array()) throw config_error(where + ": expected a matrix");
    std::vector<std::vector<Rational>> out;
    for (const auto& row : v) {
        if (!row.is_array()) throw config_error(where + ": expected a matrix");
        auto& r = out.emplace_back();
        for (const auto& x : row) r.push_back(rational_of(x, where));
    }
    return out;
}

class ConfigReader {
public:
    explicit ConfigReader(const json& doc) : doc_(doc) {}

    SessionConfig read() {
        if (!doc_.is_object()) throw config_error("top level must be a table");
        for (const auto& [key, _] : doc_.items())
            if (key != "algebra" && key != "lattice" && key != "bichar") throw config_error("unknown section [" + key + "]");
        read_algebra();
        read_lattice();
        if (doc_.contains("bichar")) {
            const json& tables = doc_["bichar"];
            if (!tables.is_object()) throw config_error("[bichar] must contain named tables");
            for (const auto& [name, table] : tables.items()) cfg_.bicharacters.insert_or_assign(name, read_bichar(name, table));
        }
        return std::move(cfg_);
    }

private:
    void read_algebra() {
        if (!doc_.contains("algebra")) return;
        const json& a = doc_["algebra"];
        for (const auto& [key, _] : a.items())
            if (key != "grouplike" && key != "primitives" && key != "coefficient_ring")
                throw config_error("unknown key algebra." + key);
        if (a.contains("grouplike")) cfg_.signature = AlgebraSignature::plain(count_of(a["grouplike"], "algebra.grouplike"));
        if (a.contains("primitives")) cfg_.num_primitives = count_of(a["primitives"], "algebra.primitives");
        if (a.contains("coefficient_ring")) {
            const std::string ring = a["coefficient_ring"].is_string() ? a["coefficient_ring"].get<std::string>() : "";
            if (ring == "Q")
                cfg_.ring = CoefficientRing::rationals;
            else if (ring == "Q[z]")
                cfg_.ring = CoefficientRing::polynomials;
            else if (ring == "Q[z,z^-1]")
                cfg_.ring = CoefficientRing::laurent;
            else
                throw config_error("algebra.coefficient_ring must be \"Q\", \"Q[z]\" or \"Q[z,z^-1]\"");
        }
    }

    void read_lattice() {
        if (!doc_.contains("lattice")) return;
        const json& l = doc_["lattice"];
        for (const auto& [key, _] : l.items())
            if (key != "rank" && key != "gram" && key != "depth" && key != "order") throw config_error("unknown key lattice." + key);
        if (!l.contains("gram")) throw config_error("lattice.gram is required");
        Lattice lattice(matrix_of(l["gram"], "lattice.gram"));
        if (l.contains("rank") && count_of(l["rank"], "lattice.rank") != lattice.rank())
            throw config_error("lattice.rank does not match the Gram matrix");
        if (doc_.contains("algebra") && doc_["algebra"].contains("grouplike") &&
            count_of(doc_["algebra"]["grouplike"], "algebra.grouplike") != lattice.rank())
            throw config_error("algebra.grouplike does not match the lattice rank");
        const auto depth = static_cast<unsigned>(l.contains("depth") ? count_of(l["depth"], "lattice.depth") : 1);
        if (depth == 0) throw config_error("lattice.depth must be positive");
        const auto order = static_cast<unsigned>(l.contains("order") ? count_of(l["order"], "lattice.order") : 2 * depth);
        cfg_.signature = AlgebraSignature::lattice(lattice.rank(), depth);
        cfg_.num_primitives = lattice.rank() * depth;
        cfg_.series_order = order;
        const BicharSpec r = lattice_bicharacter(lattice, flm_series(order), depth);
        cfg_.bicharacters.insert_or_assign("r", r);
        cfg_.bicharacters.insert_or_assign("flm", r);
        cfg_.lattice = std::move(lattice);
    }

    std::size_t grouplike_index(const json& v, const std::string& where) const {
        const std::size_t i = count_of(v, where);
        if (i < 1 || i > cfg_.signature.num_grouplike())
            throw Error(ErrorKind::unknown_generator, "UnknownGenerator: " + where + " = a" + std::to_string(i));
        return i - 1;
    }

    PrimitiveId primitive_index(const json& v, const std::string& where) const {
        PrimitiveId id = 0;
        if (v.is_string()) {
            id = parse_primitive_name(v.get<std::string>(), cfg_.signature);
        } else {
            const std::size_t m = count_of(v, where);
            if (m < 1) throw Error(ErrorKind::unknown_generator, "UnknownGenerator: " + where + " = 0");
            id = static_cast<PrimitiveId>(m - 1);
        }
        if (cfg_.num_primitives && id >= *cfg_.num_primitives)
            throw Error(ErrorKind::unknown_generator,
                        "UnknownGenerator: " + where + " = " + cfg_.signature.primitive_name(id));
        return id;
    }

    BicharSpec read_bichar(const std::string& name, const json& t) {
        const std::string base = "bichar." + name;
        if (!t.is_object()) throw config_error(base + " must be a table");
        const std::size_t rank = cfg_.signature.num_grouplike();
        BicharSpec r(rank);
        for (const auto& [key, _] : t.items())
            if (key != "gg" && key != "gp" && key != "pg" && key != "pp") throw config_error("unknown key " + base + "." + key);
        if (t.contains("gg")) {
            const json& gg = t["gg"];
            if (!gg.is_array() || gg.size() != rank) throw config_error(base + ".gg must be a " + std::to_string(rank) + "x" + std::to_string(rank) + " matrix");
            for (std::size_t i = 0; i < rank; ++i) {
                if (!gg[i].is_array() || gg[i].size() != rank)
                    throw config_error(base + ".gg must be a " + std::to_string(rank) + "x" + std::to_string(rank) + " matrix");
                for (std::size_t j = 0; j < rank; ++j) {
                    const std::string where = base + ".gg[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
                    const LaurentPoly v = laurent_of(gg[i][j], where);
                    if (!v.is_constant())
                        throw Error(ErrorKind::non_constant_grouplike_value,
                                    "NonConstantGrouplikeValue: " + where + " = " + v.to_string() +
                                        " (grouplike values must be nonzero rationals)");
                    if (v.constant_term().is_zero()) throw config_error(where + " must be nonzero");
                    r.set_gg(i, j, v.constant_term());
                }
            }
        }
        auto entries = [&](const char* key, auto&& store) {
            if (!t.contains(key)) return;
            const json& list = t[key];
            if (!list.is_array()) throw config_error(base + "." + key + " must be a list of tables");
            for (std::size_t k = 0; k < list.size(); ++k) {
                const std::string where = base + "." + key + "[" + std::to_string(k + 1) + "]";
                if (!list[k].is_object() || !list[k].contains("value")) throw config_error(where + " needs a value");
                const LaurentPoly v = laurent_of(list[k]["value"], where + ".value");
                cfg_.check_coefficient(v, where + ".value");
                store(list[k], where, v);
            }
        };
        auto need = [](const json& e, const char* k, const std::string& where) -> const json& {
            if (!e.contains(k)) throw config_error(where + " needs key " + k);
            return e[k];
        };
        entries("gp", [&](const json& e, const std::string& w, const LaurentPoly& v) {
            r.set_gp(grouplike_index(need(e, "i", w), w + ".i"), primitive_index(need(e, "m", w), w + ".m"), v);
        });
        entries("pg", [&](const json& e, const std::string& w, const LaurentPoly& v) {
            r.set_pg(primitive_index(need(e, "m", w), w + ".m"), grouplike_index(need(e, "i", w), w + ".i"), v);
        });
        entries("pp", [&](const json& e, const std::string& w, const LaurentPoly& v) {
            r.set_pp(primitive_index(need(e, "m", w), w + ".m"), primitive_index(need(e, "n", w), w + ".n"), v);
        });
        return r;
    }

    const json& doc_;
    SessionConfig cfg_;
};

}  // namespace

void SessionConfig::check_coefficient(const LaurentPoly& c, const std::string& where) const {
    if (c.is_zero()) return;
    const std::int64_t lowest = c.min_exponent();
    if (ring == CoefficientRing::rationals && !c.is_constant())
        throw config_error(where + " = " + c.to_string() + " is not in Q");
    if (ring == CoefficientRing::polynomials && lowest < 0)
        throw config_error(where + " = " + c.to_string() + " is not in Q[z]");
}

void SessionConfig::check_element(const HopfElement& a) const {
    for (const auto& [m, c] : a.terms()) {
        check_coefficient(c, "coefficient of " + render(m, signature));
        if (num_primitives)
            for (const auto& [id, e] : m.primitives())
                if (id >= *num_primitives)
                    throw Error(ErrorKind::unknown_generator, "UnknownGenerator: " + signature.primitive_name(id));
    }
}

const BicharSpec& SessionConfig::bicharacter(const std::string& name) const {
    if (name.empty()) {
        if (auto it = bicharacters.find("r"); it != bicharacters.end()) return it->second;
        if (bicharacters.size() == 1) return bicharacters.begin()->second;
        throw Error(ErrorKind::invalid_argument, "several bicharacters are defined; choose one with --bichar");
    }
    auto it = bicharacters.find(name);
    if (it == bicharacters.end()) throw Error(ErrorKind::invalid_argument, "no bicharacter named '" + name + "' in the config");
    return it->second;
}

SessionConfig parse_config(const nlohmann::json& doc) { return ConfigReader(doc).read(); }

SessionConfig parse_config(std::string_view text, bool is_json) {
    if (is_json) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(e.byte, {}, std::string("invalid JSON config: ") + e.what());
        }
        return parse_config(doc);
    }
    try {
        const toml::table t = toml::parse(text);
        return parse_config(from_toml(t));
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << "invalid TOML config at line " << e.source().begin.line << ": " << e.description();
        throw ParseError(0, {}, msg.str());
    }
}

SessionConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return parse_config(buf.str(), is_json);
}

}  // namespace bichar::cli
