#include "casex/molecule.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "casex/errors.hpp"
#include "casex/presets_generated.hpp"
#include "casex/units.hpp"

namespace casex {

namespace {

using nlohmann::json;

HalfInt half_int_from_json(const json& v, const std::string& key) {
    if (v.is_number_integer()) return HalfInt(v.get<int>());
    if (v.is_string()) return parse_half_int(v.get<std::string>());
    throw ValidationError("field '" + key + "': expected an integer or a string like \"3/2\"");
}

double finite_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ValidationError("field '" + key + "': expected a number");
    double x = v.get<double>();
    if (!std::isfinite(x)) throw ValidationError("field '" + key + "': not finite");
    return x;
}

} // namespace

void validate(const ElectronicState& state) {
    if (state.name.empty()) throw ValidationError("field 'name': must not be empty");
    if (state.omega_bar != abs(state.lambda + state.sigma))
        throw ValidationError("field 'omega_bar': inconsistent with |lambda + sigma| = " +
                              to_string(abs(state.lambda + state.sigma)));
    if (state.g_abs < 0) throw ValidationError("field 'g_abs': must be >= 0");
    if (state.d_debye < 0) throw ValidationError("field 'd_debye': must be >= 0");
    if (state.delta_ghz < 0) throw ValidationError("field 'delta_ghz': must be >= 0");
    if (!(state.be_ghz > 0)) throw ValidationError("field 'be_ghz': must be > 0");
}

ElectronicState parse_molecule_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed molecule config: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("molecule config must be a JSON object");

    for (const char* key : {"name", "lambda", "sigma", "d_debye", "delta_ghz", "be_ghz"})
        if (!doc.contains(key)) throw ValidationError(std::string("field '") + key + "': missing");

    ElectronicState s;
    if (!doc["name"].is_string()) throw ValidationError("field 'name': expected a string");
    s.name = doc["name"].get<std::string>();
    s.lambda = half_int_from_json(doc["lambda"], "lambda");
    s.sigma = half_int_from_json(doc["sigma"], "sigma");
    s.omega_bar = abs(s.lambda + s.sigma);
    if (doc.contains("omega_bar")) s.omega_bar = half_int_from_json(doc["omega_bar"], "omega_bar");

    s.d_debye = finite_number(doc["d_debye"], "d_debye");
    s.delta_ghz = finite_number(doc["delta_ghz"], "delta_ghz");
    s.be_ghz = finite_number(doc["be_ghz"], "be_ghz");

    double g_default = std::abs((s.lambda + s.sigma + s.sigma).value());
    s.g_abs = doc.contains("g_abs") ? finite_number(doc["g_abs"], "g_abs") : g_default;

    if (doc.contains("flip_kappa_pairing")) {
        if (!doc["flip_kappa_pairing"].is_boolean())
            throw ValidationError("field 'flip_kappa_pairing': expected a boolean");
        s.flip_kappa_pairing = doc["flip_kappa_pairing"].get<bool>();
    }
    if (doc.contains("references")) {
        if (!doc["references"].is_array()) throw ValidationError("field 'references': expected an array");
        for (const auto& r : doc["references"]) s.references.push_back(r.get<std::string>());
    }

    validate(s);
    return s;
}

std::string molecule_to_json(const ElectronicState& state) {
    auto half = [](HalfInt h) -> json {
        if (h.is_integer()) return h.twice() / 2;
        return to_string(h);
    };
    json doc;
    doc["name"] = state.name;
    doc["lambda"] = half(state.lambda);
    doc["sigma"] = half(state.sigma);
    doc["omega_bar"] = half(state.omega_bar);
    doc["g_abs"] = state.g_abs;
    doc["d_debye"] = state.d_debye;
    doc["delta_ghz"] = state.delta_ghz;
    doc["be_ghz"] = state.be_ghz;
    doc["flip_kappa_pairing"] = state.flip_kappa_pairing;
    doc["references"] = state.references;
    return doc.dump(4);
}

std::vector<std::string> preset_names() { return {"OH_X2Pi32", "ICl_A3Pi1"}; }

ElectronicState load_molecule(std::string_view source) {
    if (source == "OH_X2Pi32") return parse_molecule_json(detail::kPresetOH);
    if (source == "ICl_A3Pi1") return parse_molecule_json(detail::kPresetICl);

    std::ifstream in{std::string(source)};
    if (!in) {
        throw ArgumentError("unknown preset or unreadable file: '" + std::string(source) +
                            "' (presets: OH_X2Pi32, ICl_A3Pi1)");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_molecule_json(buf.str());
}

double stark_scale(const ElectronicState& state, double e_kvcm) {
    if (e_kvcm < 0) throw ArgumentError("electric field must be >= 0");
    return state.d_debye * e_kvcm * units::debye_kvcm_to_ghz;
}

double zeeman_scale(const ElectronicState& state, double b_gauss) {
    if (b_gauss < 0) throw ArgumentError("magnetic field must be >= 0");
    return state.g_abs * b_gauss * units::bohr_magneton_gauss_to_ghz;
}

} // namespace casex
