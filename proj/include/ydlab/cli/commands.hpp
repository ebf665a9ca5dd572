#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ydlab/cli/expression.hpp"
#include "ydlab/cli/report.hpp"
#include "ydlab/decomp.hpp"
#include "ydlab/double.hpp"
#include "ydlab/hopf.hpp"

namespace ydlab::cli {

/// Parsed command line of one invocation.
struct Options {
    std::string verb;
    std::vector<std::string> inputs;
    std::optional<Kind> kind;
    std::optional<std::string> field;
    std::size_t dims = SampleSpec{}.enumeration_dim;
    std::uint64_t seed = kDefaultSeed;
    bool machine = false;
};

namespace detail {

inline std::optional<AnyField> field_override(const Options& o) {
    if (!o.field) return std::nullopt;
    return parse_field_spec(*o.field);
}

/// A Hopf algebra given as a fixture name or a file path.
inline AnyHopf load_hopf_arg(const Options& o, const std::string& arg) {
    return resolve_hopf_arg(arg, {}, field_override(o));
}

/// An object file read over `h`; its own "hopf" entry is not consulted.
/// With --kind the object is reinterpreted as that kind.
template <ExactField F>
Object<F> load_object_arg(const Options& o, const HopfPtr<F>& h, const std::string& path) {
    auto obj = object_from_json(h, read_json_file(path));
    return o.kind ? obj.with_kind(*o.kind) : obj;
}

template <ExactField F>
Kind object_kind(const Options& o, const Object<F>& m) {
    return o.kind ? *o.kind : m.kind();
}

inline std::string passed(bool ok) { return ok ? "passed" : "failed"; }

template <typename Fn>
Outcome with_hopf(const Options& o, Fn&& fn) {
    return std::visit([&](const auto& h) { return fn(h); }, load_hopf_arg(o, o.inputs.at(0)));
}

}  // namespace detail

inline Outcome verify_hopf_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto r = verify_hopf(*h);
        auto j = make_report(o.verb);
        j["hopf"] = hopf_summary(*h);
        Json families = Json::object();
        for (const auto& name : hopf_axiom_families())
            families[name] = detail::passed(std::ranges::find(r.failures, name) == r.failures.end());
        j["families"] = std::move(families);
        j["failures"] = r.details;
        j["commutative"] = r.flags.commutative;
        j["cocommutative"] = r.flags.cocommutative;
        if (r.passed) {
            j["semisimple"] = is_semisimple(*h);
            j["cosemisimple"] = is_cosemisimple(*h);
        }
        return finish(std::move(j), r.passed);
    });
}

inline Outcome verify_object_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto m = detail::load_object_arg(o, h, o.inputs.at(1));
        auto r = check_kind(m);
        auto j = make_report(o.verb);
        j["object"] = object_summary(m);
        j["failures"] = r.failures;
        return finish(std::move(j), r.passed);
    });
}

/// Builds the object and re-verifies it. The report carries the object file
/// under "object".
inline Outcome construct_command(const Options& o) {
    auto expr = parse_expression(o.inputs.at(0));
    Constructor ctor(o.kind.value_or(Kind::YD), detail::field_override(o), {});
    return std::visit(
        [&]<ExactField F>(const Built<F>& b) {
            const auto& m = *b.object;
            auto r = check_kind(m);
            auto j = make_report(o.verb);
            j["expression"] = o.inputs.at(0);
            j["object_summary"] = object_summary(m);
            j["failures"] = r.failures;
            j["object"] = to_json(m, b.hopf_ref);
            return finish(std::move(j), r.passed);
        },
        ctor.build(expr));
}

inline Outcome coinv_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto m = detail::load_object_arg(o, h, o.inputs.at(1));
        auto r = verify_comodule(m.comodule());
        auto j = make_report(o.verb);
        j["object"] = object_summary(m);
        j["failures"] = r.failures;
        if (r.passed) j["coinvariants"] = subspace_json(coinvariants(m.comodule()));
        return finish(std::move(j), r.passed);
    });
}

/// Colinear H-linear maps, compared with the coinvariants of the coaction on
/// hom_H(M, N) wherever that coaction is defined.
inline Outcome hom_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto m = detail::load_object_arg(o, h, o.inputs.at(1));
        auto n = detail::load_object_arg(o, h, o.inputs.at(2));
        const auto kind = detail::object_kind(o, m);
        auto linear = h_linear_homs(m, n);
        auto colinear = colinear_homs(m, n);
        auto j = make_report(o.verb);
        j["kind"] = kind_name(kind);
        j["source"] = object_summary(m);
        j["target"] = object_summary(n);
        j["h_linear_dim"] = linear.dim();
        j["colinear"] = subspace_json(colinear);
        bool ok = true;
        if (kind == Kind::Long || h->is_commutative()) {
            auto hc = hom_coaction(m, n, kind);
            auto co = coinvariants(hc.comodule);
            std::vector<Vector<F>> lifted;
            for (const auto& c : co.basis()) lifted.push_back(hc.space.combine(c));
            auto image = Subspace<F>::span(m.field(), m.dim() * n.dim(), lifted);
            ok = image == colinear;
            j["route"] = hc.route;
            j["coinvariants_dim"] = co.dim();
            j["coinvariants_equal_colinear"] = ok;
        } else {
            j["route"] = nullptr;
            j["note"] = "no coaction on hom_H(M, N) for yd objects over a noncommutative H";
        }
        return finish(std::move(j), ok);
    });
}

/// D(H) and, for each yd object given, the round trip through D(H)-modules.
inline Outcome double_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto d = drinfeld_double(h);
        auto r = verify_hopf(*d.hopf);
        auto j = make_report(o.verb);
        j["base"] = hopf_summary(*h);
        j["convention"] = convention_name(d.convention);
        j["dim"] = d.hopf->dim();
        j["axioms"] = detail::passed(r.passed);
        j["failures"] = r.details;
        j["commutative"] = r.flags.commutative;
        j["cocommutative"] = r.flags.cocommutative;
        bool ok = r.passed;
        Json trips = Json::array();
        for (std::size_t i = 1; i < o.inputs.size(); ++i) {
            auto m = detail::load_object_arg(o, h, o.inputs[i]);
            auto a = yd_to_double(d, m);
            bool exact = double_to_yd(d, a) == m.with_kind(Kind::YD);
            ok = ok && exact;
            trips.push_back(Json{{"input", o.inputs[i]}, {"dim", m.dim()}, {"round_trip", detail::passed(exact)}});
        }
        if (!trips.empty()) j["objects"] = std::move(trips);
        return finish(std::move(j), ok);
    });
}

template <ExactField F>
Json not_split_json(const NotSplit<F>& ns) {
    return Json{{"subobject", subspace_json(ns.sub)},
                {"witness", vector_to_json(ns.sub.field(), std::span<const scalar_t<F>>(ns.witness))},
                {"certified", ns.certifies()}};
}

inline Outcome decompose_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto m = detail::load_object_arg(o, h, o.inputs.at(1));
        auto r = check_kind(m);
        auto j = make_report(o.verb);
        j["object"] = object_summary(m);
        j["seed"] = o.seed;
        if (!r.passed) {
            j["failures"] = r.failures;
            return finish(std::move(j), false);
        }
        auto d = decompose(m, o.seed);
        Json summands = Json::array();
        for (const auto& s : d.summands) {
            auto sj = subspace_json(s.space);
            sj["simple"] = s.certificate.simple;
            sj["method"] = s.certificate.method;
            sj["exhaustive"] = s.certificate.exhaustive;
            summands.push_back(std::move(sj));
        }
        j["semisimple"] = d.semisimple();
        j["summands"] = std::move(summands);
        if (d.semisimple())
            j["projections"] = detail::passed(verify_decomposition(m, d).passed);
        else
            j["non_split"] = not_split_json(*d.non_split);
        return finish(std::move(j), d.semisimple());
    });
}

inline Outcome projective_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto m = share(detail::load_object_arg(o, h, o.inputs.at(1)));
        const auto kind = detail::object_kind(o, *m);
        auto r = check_kind(*m);
        auto j = make_report(o.verb);
        j["object"] = object_summary(*m);
        if (!r.passed) {
            j["failures"] = r.failures;
            return finish(std::move(j), false);
        }
        auto cover = free_cover(m, kind);
        auto section = projective_section(m, kind);
        j["cover"] = Json{{"dim", cover.map.source->dim()},
                          {"surjective", cover.surjective},
                          {"h_linear", *cover.map.flags.h_linear},
                          {"h_colinear", *cover.map.flags.h_colinear}};
        j["projective"] = section.has_value();
        return finish(std::move(j), cover.surjective && section.has_value());
    });
}

inline Outcome semisimple_report_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        SampleSpec spec;
        spec.enumeration_dim = o.dims;
        spec.seed = o.seed;
        const auto kind = o.kind.value_or(Kind::YD);
        auto rep = semisimplicity_report(h, kind, spec);
        auto j = make_report(o.verb);
        j["hopf"] = hopf_summary(*h);
        j["kind"] = kind_name(kind);
        const auto& hy = rep.hypotheses;
        j["hypotheses"] = Json{{"commutative", hy.commutative ? Json(*hy.commutative) : Json(nullptr)},
                               {"finite_dimensional", hy.finite_dimensional},
                               {"noetherian", hy.noetherian},
                               {"semisimple", hy.semisimple},
                               {"cosemisimple", hy.cosemisimple},
                               {"hold", hy.hold()}};
        j["sample"] = Json{{"enumeration_dim", spec.enumeration_dim},
                           {"construction_dim", spec.construction_dim},
                           {"seed", spec.seed}};
        j["one_dim_objects"] = rep.one_dim_objects;
        j["one_dim_classes"] = rep.one_dim_classes;
        std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_dim;  // dim -> (samples, split)
        std::size_t heuristic = 0;
        for (const auto& s : rep.outcomes) {
            auto& [count, split] = by_dim[s.dim];
            ++count;
            if (s.semisimple) ++split;
            if (!s.exhaustive) ++heuristic;
        }
        Json dims = Json::array();
        for (const auto& [d, c] : by_dim)
            dims.push_back(Json{{"dim", d}, {"samples", c.first}, {"split", c.second}});
        j["samples"] = std::move(dims);
        j["heuristic_certificates"] = heuristic;
        j["simple_class_dims"] = rep.simple_class_dims;
        j["expected_simple_classes"] =
            rep.expected_simple_classes ? Json(*rep.expected_simple_classes) : Json(nullptr);
        if (rep.witness) {
            const auto& w = *rep.witness;
            auto wj = Json{{"sample_index", w.sample_index}, {"label", w.label}};
            wj["object"] = to_json(w.object, Json(nullptr));
            wj["object"].erase("hopf");
            wj.update(not_split_json(w.certificate));
            j["witness"] = std::move(wj);
        }
        j["scope"] = "finite-dimensional objects only";
        j["verdict"] = verdict_name(rep.verdict);
        Outcome out{std::move(j), kExitOk};
        const bool bad = rep.verdict == Verdict::Counterexample || rep.verdict == Verdict::Inconsistent;
        out.report["status"] = bad ? "fail" : "pass";
        out.exit_code = bad ? kExitCheckFailed : kExitOk;
        return out;
    });
}

/// Braiding of the object with itself, both hexagons and the braid relation.
inline Outcome qybe_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto m = detail::load_object_arg(o, h, o.inputs.at(1)).with_kind(Kind::YD);
        auto r = check_yd(m);
        auto j = make_report(o.verb);
        j["object"] = object_summary(m);
        if (!r.passed) {
            j["failures"] = r.failures;
            return finish(std::move(j), false);
        }
        auto c = braiding(m, m);
        auto [first, second] = hexagon_check(m, m, m);
        bool qybe = qybe_check(m);
        j["braiding"] = Json{{"invertible", true}, {"h_linear", *c.flags.h_linear}, {"h_colinear", *c.flags.h_colinear}};
        j["hexagons"] = Json::array({detail::passed(first), detail::passed(second)});
        j["qybe"] = detail::passed(qybe);
        return finish(std::move(j), first && second && qybe);
    });
}

inline Outcome adjunction_check_command(const Options& o) {
    return detail::with_hopf(o, [&]<ExactField F>(const HopfPtr<F>& h) {
        auto m = share(detail::load_object_arg(o, h, o.inputs.at(1)));
        auto n = share(detail::load_object_arg(o, h, o.inputs.at(2)));
        auto p = share(detail::load_object_arg(o, h, o.inputs.at(3)));
        const auto kind = detail::object_kind(o, *m);
        auto r = adjunction_iso(m, n, p, kind);
        auto j = make_report(o.verb);
        j["kind"] = kind_name(kind);
        j["dims"] = Json::array({m->dim(), n->dim(), p->dim()});
        j["route"] = r.projectivity_route;
        j["lhs_dim"] = r.lhs_dim;
        j["rhs_dim"] = r.rhs_dim;
        j["bijective"] = r.bijective;
        return finish(std::move(j), r.bijective);
    });
}

}  // namespace ydlab::cli
