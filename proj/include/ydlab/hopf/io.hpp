#pragma once

#include <fstream>
#include <initializer_list>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "ydlab/hopf/hopf_algebra.hpp"

namespace ydlab {

using Json = nlohmann::ordered_json;

using AnyField = std::variant<PrimeField, RationalField>;

using AnyHopf = std::variant<HopfPtr<PrimeField>, HopfPtr<RationalField>>;

inline Json field_to_json(const PrimeField& f) { return Json{{"kind", "gf"}, {"p", f.p()}}; }
inline Json field_to_json(const RationalField&) { return Json{{"kind", "q"}}; }

namespace detail {

inline void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!j.is_object()) fail(Errc::ParseError, what + " must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items())
        if (!ok.contains(key)) fail(Errc::ParseError, what + ": unknown key '" + key + "'");
}

inline const Json& member(const Json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) fail(Errc::ParseError, what + ": missing key '" + key + "'");
    return *it;
}

inline std::size_t as_index(const Json& j, const std::string& what) {
    if (!(j.is_number_integer() && j.get<long long>() >= 0))
        fail(Errc::ParseError, what + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline const Json& as_array(const Json& j, std::size_t expected, const std::string& what) {
    if (!j.is_array()) fail(Errc::ParseError, what + ": expected an array");
    if (j.size() != expected)
        fail(Errc::DimensionMismatch, what + ": expected length " + std::to_string(expected) + ", got " + std::to_string(j.size()));
    return j;
}

}  // namespace detail

inline AnyField field_from_json(const Json& j) {
    detail::require_keys(j, {"kind", "p"}, "field");
    const auto& kind = detail::member(j, "kind", "field");
    require(kind.is_string(), Errc::ParseError, "field.kind must be a string");
    if (kind == "q") {
        require(!j.contains("p"), Errc::ParseError, "field: 'p' given for Q");
        return RationalField{};
    }
    require(kind == "gf", Errc::ParseError, "field.kind must be \"gf\" or \"q\"");
    auto p = detail::as_index(detail::member(j, "p", "field"), "field.p");
    require(p < (1ull << 31), Errc::ParseError, "field.p too large");
    return PrimeField(static_cast<std::uint32_t>(p));
}

/// Field override syntax for the command line: "q", "Q", "gf:7", "GF(7)".
inline AnyField parse_field_spec(const std::string& spec) {
    if (spec == "q" || spec == "Q") return RationalField{};
    std::string digits;
    if (spec.rfind("gf:", 0) == 0)
        digits = spec.substr(3);
    else if (spec.rfind("GF(", 0) == 0 && spec.size() > 4 && spec.back() == ')')
        digits = spec.substr(3, spec.size() - 4);
    if (!(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 11))
        fail(Errc::ParseError, "bad field spec '" + spec + "'");
    auto p = std::stoull(digits);
    require(p < (1ull << 31), Errc::ParseError, "field characteristic too large");
    return PrimeField(static_cast<std::uint32_t>(p));
}

/// Scalars are written as strings; plain JSON integers are accepted on input.
template <ExactField F>
scalar_t<F> scalar_from_json(const F& field, const Json& j) {
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
    require(j.is_string(), Errc::ParseError, "scalar must be a string");
    return field.parse(j.get<std::string>());
}

template <ExactField F>
Json vector_to_json(const F& field, std::span<const scalar_t<F>> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(field.format(x));
    return out;
}

template <ExactField F>
Vector<F> vector_from_json(const F& field, const Json& j, std::size_t n, const std::string& what) {
    detail::as_array(j, n, what);
    Vector<F> v;
    for (const auto& x : j) v.push_back(scalar_from_json(field, x));
    return v;
}

template <ExactField F>
Json matrix_to_json(const Matrix<F>& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.field(), m.row(i)));
    return out;
}

template <ExactField F>
Matrix<F> matrix_from_json(const F& field, const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    detail::as_array(j, rows, what);
    std::vector<Vector<F>> r;
    for (std::size_t i = 0; i < rows; ++i)
        r.push_back(vector_from_json(field, j[i], cols, what + "[" + std::to_string(i) + "]"));
    return Matrix<F>::from_rows(field, cols, r);
}

/// Serializes H in the Hopf algebra file format. `antipode` is written as
/// rows of the matrix whose column j is S(e_j).
template <ExactField F>
Json to_json(const HopfAlgebra<F>& h) {
    const auto n = h.dim();
    const auto& k = h.field();
    Json j;
    j["field"] = field_to_json(k);
    j["dim"] = n;
    j["basis"] = h.basis_names();
    j["unit"] = vector_to_json(k, h.unit());
    Json mult = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(vector_to_json(k, h.product(a, b)));
        mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    Json comult = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
        Json terms = Json::array();
        for (const auto& t : h.comult(a)) terms.push_back(Json::array({t.left, t.right, k.format(t.coeff)}));
        comult.push_back(std::move(terms));
    }
    j["comult"] = std::move(comult);
    j["counit"] = vector_to_json(k, h.counit());
    j["antipode"] = matrix_to_json(h.antipode());
    return j;
}

/// Builds H over a given field from the file format, ignoring the file's own
/// "field" entry (callers decide which field applies).
template <ExactField F>
HopfAlgebra<F> hopf_from_json(const F& field, const Json& j) {
    detail::require_keys(j, {"field", "dim", "basis", "unit", "mult", "comult", "counit", "antipode"}, "hopf");
    const auto n = detail::as_index(detail::member(j, "dim", "hopf"), "dim");
    require(n > 0, Errc::DimensionMismatch, "dim must be positive");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        detail::as_array(j["basis"], n, "basis");
        for (const auto& s : j["basis"]) {
            require(s.is_string(), Errc::ParseError, "basis names must be strings");
            names.push_back(s.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    }
    auto unit = vector_from_json(field, detail::member(j, "unit", "hopf"), n, "unit");
    const auto& mj = detail::as_array(detail::member(j, "mult", "hopf"), n, "mult");
    std::vector<scalar_t<F>> mult;
    mult.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        detail::as_array(mj[a], n, "mult[" + std::to_string(a) + "]");
        for (std::size_t b = 0; b < n; ++b) {
            auto v = vector_from_json(field, mj[a][b], n, "mult[" + std::to_string(a) + "][" + std::to_string(b) + "]");
            mult.insert(mult.end(), v.begin(), v.end());
        }
    }
    const auto& cj = detail::as_array(detail::member(j, "comult", "hopf"), n, "comult");
    std::vector<typename HopfAlgebra<F>::Coproduct> comult(n);
    for (std::size_t a = 0; a < n; ++a) {
        require(cj[a].is_array(), Errc::ParseError, "comult entries must be arrays of triples");
        for (const auto& t : cj[a]) {
            detail::as_array(t, 3, "comult triple");
            auto l = detail::as_index(t[0], "comult index");
            auto r = detail::as_index(t[1], "comult index");
            require(l < n && r < n, Errc::DimensionMismatch, "comult index out of range");
            comult[a].push_back({l, r, scalar_from_json(field, t[2])});
        }
    }
    auto counit = vector_from_json(field, detail::member(j, "counit", "hopf"), n, "counit");
    auto s = matrix_from_json(field, detail::member(j, "antipode", "hopf"), n, n, "antipode");
    return HopfAlgebra<F>(field, std::move(names), std::move(unit), std::move(mult), std::move(comult), std::move(counit),
                          std::move(s));
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, origin + ": " + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) fail(Errc::ParseError, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

/// Loads a Hopf algebra document, over its own field unless `override` is given.
inline AnyHopf load_hopf(const Json& j, const std::optional<AnyField>& override_field = std::nullopt) {
    require(j.is_object(), Errc::ParseError, "hopf document must be an object");
    AnyField field = override_field ? *override_field : field_from_json(detail::member(j, "field", "hopf"));
    try {
        return std::visit([&](const auto& f) -> AnyHopf { return share(hopf_from_json(f, j)); }, field);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("hopf: ") + e.what());
    }
}

inline AnyHopf load_hopf_file(const std::string& path, const std::optional<AnyField>& override_field = std::nullopt) {
    return load_hopf(read_json_file(path), override_field);
}

}  // namespace ydlab
