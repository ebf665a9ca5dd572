#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "ydlab/compat.hpp"
#include "ydlab/hopf/characters.hpp"
#include "ydlab/rep/io.hpp"

namespace ydlab::cli {

/// Parsed construction expression. A leaf is a bare word: a fixture name,
/// a file path, or an argument such as "triv" or "3".
struct Expr {
    std::string head;
    std::vector<Expr> args;

    bool is_leaf() const noexcept { return args.empty(); }
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    Expr parse() {
        auto e = expr();
        skip_space();
        if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    static bool is_word_char(char c) {
        return c != '(' && c != ')' && c != ',' && !std::isspace(static_cast<unsigned char>(c));
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::ParseError, "construct expression at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expr() {
        skip_space();
        auto start = pos_;
        while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
        if (start == pos_) error(pos_ == text_.size() ? "unexpected end of input" : "expected a word");
        Expr e{text_.substr(start, pos_ - start), {}};
        if (!accept('(')) return e;
        do {
            e.args.push_back(expr());
        } while (accept(','));
        if (!accept(')')) error("expected ',' or ')'");
        return e;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expression(const std::string& text) { return detail::ExprParser(text).parse(); }

/// A Hopf algebra named on the command line: a built-in fixture (re-read over
/// the override field when one is given) or a file path.
inline AnyHopf resolve_hopf_arg(const std::string& name, const std::filesystem::path& base_dir,
                                const std::optional<AnyField>& field) {
    if (field)
        if (auto builtin = builtin_fixture(name))
            return std::visit([&](const auto& h) { return load_hopf(to_json(*h), field); }, *builtin);
    return resolve_hopf_ref(Json(name), base_dir, field);
}

/// A constructed object and how its Hopf algebra should be referenced when
/// written out: a fixture name, or null for an inline copy.
template <ExactField F>
struct Built {
    ObjectPtr<F> object;
    Json hopf_ref;
};

using AnyBuilt = std::variant<Built<PrimeField>, Built<RationalField>>;

/// Evaluates construction expressions for one object kind.
class Constructor {
public:
    Constructor(Kind kind, std::optional<AnyField> field, std::filesystem::path base_dir)
        : kind_(kind), field_(std::move(field)), base_dir_(std::move(base_dir)) {}

    AnyBuilt build(const Expr& e) const {
        if (e.is_leaf()) return load_object(e.head);
        if (e.head == "FREE") return free(e);
        if (e.head == "TRIVIAL") return trivial(e);
        if (e.head == "TENSOR" || e.head == "TENSORH" || e.head == "HOM") return binary(e);
        fail(Errc::ParseError, "unknown constructor '" + e.head + "'");
    }

private:
    static void arity(const Expr& e, std::size_t n) {
        if (e.args.size() != n)
            fail(Errc::ParseError, e.head + " takes " + std::to_string(n) + " arguments, got " + std::to_string(e.args.size()));
    }

    static const std::string& word(const Expr& e, const std::string& what) {
        if (!e.is_leaf()) fail(Errc::ParseError, what + " must be a plain word, not " + e.head + "(...)");
        return e.head;
    }

    Json fixture_ref(const Json& ref) const {
        if (!field_ && ref.is_string() && builtin_fixture(ref.get<std::string>())) return ref;
        return nullptr;
    }

    AnyHopf hopf(const std::string& name) const {
        return resolve_hopf_arg(name, base_dir_, field_);
    }

    AnyBuilt load_object(const std::string& path) const {
        auto full = std::filesystem::path(path);
        if (full.is_relative()) full = base_dir_ / full;
        auto doc = read_json_file(full.string());
        if (!(doc.is_object() && doc.contains("hopf"))) fail(Errc::ParseError, "'" + path + "' has no 'hopf' entry");
        auto any = resolve_hopf_ref(doc["hopf"], full.parent_path(), field_);
        auto ref = fixture_ref(doc["hopf"]);
        return std::visit(
            [&]<ExactField F>(const HopfPtr<F>& h) -> AnyBuilt {
                return Built<F>{share(object_from_json(h, doc)), ref};
            },
            any);
    }

    AnyBuilt trivial(const Expr& e) const {
        arity(e, 2);
        const auto& name = word(e.args[0], "TRIVIAL hopf");
        const auto& count = word(e.args[1], "TRIVIAL dimension");
        if (!(count.find_first_not_of("0123456789") == std::string::npos && count.size() < 6))
            fail(Errc::ParseError, "TRIVIAL dimension must be a small non-negative integer, got '" + count + "'");
        const auto n = static_cast<std::size_t>(std::stoul(count));
        require(n > 0, Errc::ParseError, "TRIVIAL dimension must be positive");
        return std::visit(
            [&]<ExactField F>(const HopfPtr<F>& h) -> AnyBuilt {
                return Built<F>{share(Object<F>::trivial(h, n, kind_)), fixture_ref(Json(name))};
            },
            hopf(name));
    }

    /// triv, reg, the name of a grouplike basis element, or an object file
    /// whose coaction is used.
    template <ExactField F>
    ComoduleStructure<F> comodule(const HopfPtr<F>& h, const std::string& spec) const {
        if (spec == "triv") return ComoduleStructure<F>::trivial(h, 1);
        if (spec == "reg") return ComoduleStructure<F>::regular(h);
        const auto& names = h->basis_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == spec) {
                auto g = unit_vector(h->field(), h->dim(), i);
                const auto gs = grouplikes(*h);
                if (std::ranges::find(gs, g) == gs.end()) fail(Errc::ParseError, "'" + spec + "' is not grouplike");
                return ComoduleStructure<F>::grouplike(h, std::span<const scalar_t<F>>(g));
            }
        auto any = load_object(spec);
        auto* b = std::get_if<Built<F>>(&any);
        if (b == nullptr) fail(Errc::ShapeMismatch, "comodule '" + spec + "' is over a different field");
        return b->object->comodule();
    }

    AnyBuilt free(const Expr& e) const {
        arity(e, 2);
        const auto& name = word(e.args[0], "FREE hopf");
        const auto& spec = word(e.args[1], "FREE comodule");
        return std::visit(
            [&]<ExactField F>(const HopfPtr<F>& h) -> AnyBuilt {
                return Built<F>{share(free_object(h, comodule(h, spec), kind_)), fixture_ref(Json(name))};
            },
            hopf(name));
    }

    AnyBuilt binary(const Expr& e) const {
        arity(e, 2);
        auto left = build(e.args[0]);
        auto right = build(e.args[1]);
        return std::visit(
            [&]<typename A, typename B>(const A& a, const B& b) -> AnyBuilt {
                if constexpr (!std::is_same_v<A, B>) {
                    fail(Errc::ShapeMismatch, e.head + " operands are over different fields");
                } else {
                    const auto& m = *a.object;
                    const auto& n = *b.object;
                    Json ref = a.hopf_ref == b.hopf_ref ? a.hopf_ref : Json(nullptr);
                    if (e.head == "TENSOR")
                        return A{share(kind_ == Kind::YD ? tensor_yd(m, n) : tensor_long(m, n)), ref};
                    if (e.head == "TENSORH") return A{share(tensor_over_h(m, n, kind_).object), ref};
                    return A{share(hom_object(m, n, kind_).object), ref};
                }
            },
            left, right);
    }

    Kind kind_;
    std::optional<AnyField> field_;
    std::filesystem::path base_dir_;
};

}  // namespace ydlab::cli
