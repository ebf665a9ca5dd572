#pragma once

#include <filesystem>

#include "ydlab/hopf/fixtures.hpp"
#include "ydlab/hopf/io.hpp"
#include "ydlab/rep/structures.hpp"

namespace ydlab {

/// Serializes an object in the object file format. `hopf_ref` is written
/// verbatim under "hopf": a fixture name, a path, or an inline document.
template <ExactField F>
Json to_json(const Object<F>& m, Json hopf_ref = nullptr) {
    const auto& k = m.field();
    Json j;
    j["hopf"] = hopf_ref.is_null() ? to_json(*m.hopf()) : std::move(hopf_ref);
    j["kind"] = kind_name(m.kind());
    j["dim"] = m.dim();
    if (m.has_action()) {
        Json action = Json::array();
        for (const auto& op : m.module().ops()) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(vector_to_json(k, op.column(c)));
            action.push_back(std::move(row));
        }
        j["action"] = std::move(action);
    }
    if (m.has_coaction()) {
        Json coaction = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            Json terms = Json::array();
            for (const auto& t : m.comodule().terms(c))
                terms.push_back(Json::array({t.target, t.hopf_index, k.format(t.coeff)}));
            coaction.push_back(std::move(terms));
        }
        j["coaction"] = std::move(coaction);
    }
    return j;
}

/// Resolves the "hopf" entry of an object document: a fixture name, a path
/// relative to `base_dir`, or an inline Hopf algebra document.
inline AnyHopf resolve_hopf_ref(const Json& ref, const std::filesystem::path& base_dir,
                                const std::optional<AnyField>& override_field = std::nullopt) {
    if (ref.is_object()) return load_hopf(ref, override_field);
    require(ref.is_string(), Errc::ParseError, "object 'hopf' must be a string or an object");
    auto name = ref.get<std::string>();
    if (!override_field)
        if (auto builtin = builtin_fixture(name)) return *builtin;
    auto path = std::filesystem::path(name);
    if (path.is_relative()) path = base_dir / path;
    return load_hopf_file(path.string(), override_field);
}

/// Builds an object over a given Hopf algebra; the document's own "hopf"
/// entry, if present, is not consulted.
template <ExactField F>
Object<F> object_from_json(const HopfPtr<F>& hopf, const Json& j) {
    detail::require_keys(j, {"hopf", "dim", "action", "coaction", "kind"}, "object");
    const auto& k = hopf->field();
    const auto m = detail::as_index(detail::member(j, "dim", "object"), "dim");
    const auto& kind_json = detail::member(j, "kind", "object");
    require(kind_json.is_string(), Errc::ParseError, "object kind must be a string");
    auto kind = parse_kind(kind_json.get<std::string>());
    try {
        std::optional<ModuleStructure<F>> mod;
        std::optional<ComoduleStructure<F>> com;
        if (j.contains("action")) {
            const auto& a = detail::as_array(j["action"], hopf->dim(), "action");
            std::vector<std::vector<Vector<F>>> tensor;
            for (std::size_t i = 0; i < hopf->dim(); ++i) {
                detail::as_array(a[i], m, "action[" + std::to_string(i) + "]");
                std::vector<Vector<F>> row;
                for (std::size_t c = 0; c < m; ++c)
                    row.push_back(vector_from_json(k, a[i][c], m, "action[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
                tensor.push_back(std::move(row));
            }
            mod.emplace(ModuleStructure<F>::from_tensor(hopf, m, tensor));
        }
        if (j.contains("coaction")) {
            const auto& c = detail::as_array(j["coaction"], m, "coaction");
            std::vector<std::vector<typename ComoduleStructure<F>::Term>> rho(m);
            for (std::size_t v = 0; v < m; ++v) {
                require(c[v].is_array(), Errc::ParseError, "coaction entries must be arrays of triples");
                for (const auto& t : c[v]) {
                    detail::as_array(t, 3, "coaction triple");
                    rho[v].push_back({detail::as_index(t[0], "coaction index"), detail::as_index(t[1], "coaction index"),
                                      scalar_from_json(k, t[2])});
                }
            }
            com.emplace(ComoduleStructure<F>::from_terms(hopf, m, rho));
        }
        return Object<F>(std::move(mod), std::move(com), kind);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("object: ") + e.what());
    }
}

}  // namespace ydlab
