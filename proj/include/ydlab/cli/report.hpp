#pragma once

#include <cctype>
#include <ostream>
#include <string>

#include "ydlab/rep/io.hpp"

namespace ydlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Result of one command: the structured report and the process exit code.
struct Outcome {
    Json report;
    int exit_code = kExitOk;
};

/// Starts a report with the fields every command shares.
inline Json make_report(const std::string& command) {
    Json j;
    j["command"] = command;
    j["status"] = "pass";
    return j;
}

/// Sets the status from `ok` and returns the matching outcome.
inline Outcome finish(Json report, bool ok) {
    report["status"] = ok ? "pass" : "fail";
    return {std::move(report), ok ? kExitOk : kExitCheckFailed};
}

inline Outcome error_outcome(const std::string& command, const std::string& code, const std::string& message,
                             int exit_code) {
    auto j = make_report(command);
    j["status"] = "error";
    j["error"] = Json{{"code", code}, {"message", message}};
    return {std::move(j), exit_code};
}

template <ExactField F>
Json subspace_json(const Subspace<F>& s) {
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(vector_to_json(s.field(), std::span<const scalar_t<F>>(v)));
    return Json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

template <ExactField F>
Json hopf_summary(const HopfAlgebra<F>& h) {
    return Json{{"field", h.field().name()}, {"dim", h.dim()}, {"basis", h.basis_names()}};
}

template <ExactField F>
Json object_summary(const Object<F>& m) {
    return Json{{"kind", kind_name(m.kind())}, {"dim", m.dim()}};
}

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

/// Scalars and nested arrays of numbers or single words print on one line.
inline bool is_flat(const Json& j) {
    if (j.is_string()) return j.get<std::string>().find(' ') == std::string::npos;
    if (!j.is_array()) return is_scalar(j);
    for (const auto& x : j)
        if (!is_flat(x)) return false;
    return true;
}

inline std::string inline_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    if (!j.is_array()) return j.dump();
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_text(j[i]);
    return out + "]";
}

inline void render(std::ostream& out, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_flat(value) || is_scalar(value)) {
                out << pad << key << ": " << inline_text(value) << '\n';
            } else {
                out << pad << key << ":\n";
                render(out, value, depth + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (is_flat(x) || is_scalar(x)) {
                out << pad << "- " << inline_text(x) << '\n';
            } else {
                out << pad << "-\n";
                render(out, x, depth + 1);
            }
        }
    } else {
        out << pad << inline_text(j) << '\n';
    }
}

}  // namespace detail

/// Indented plain-text rendering headed by "<command>: <STATUS>".
inline void render_human(std::ostream& out, const Json& report) {
    std::string status = report.value("status", "");
    for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << report.value("command", "ydlab") << ": " << status << '\n';
    Json body = Json::object();
    for (const auto& [key, value] : report.items())
        if (key != "command" && key != "status") body[key] = value;
    detail::render(out, body, 1);
}

}  // namespace ydlab::cli
