#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "ydlab/cli/commands.hpp"

namespace ydlab::cli {

struct Verb {
    const char* name;
    const char* summary;
    const char* inputs;
    int min_inputs;
    int max_inputs;  // -1: unbounded
    bool seed;
    bool dims;
    Outcome (*run)(const Options&);
};

inline const std::vector<Verb>& verbs() {
    static const std::vector<Verb> table = {
        {"verify-hopf", "Check the Hopf algebra axioms", "HOPF", 1, 1, false, false, verify_hopf_command},
        {"verify-object", "Check an object against its kind", "HOPF OBJECT", 2, 2, false, false,
         verify_object_command},
        {"construct", "Build an object from an expression", "EXPR", 1, 1, false, false, construct_command},
        {"coinv", "Coinvariants of an object's coaction", "HOPF OBJECT", 2, 2, false, false, coinv_command},
        {"hom", "Colinear maps and the coaction on hom_H(M, N)", "HOPF M N", 3, 3, false, false, hom_command},
        {"double", "Drinfeld double and round trips of yd objects", "HOPF [OBJECT...]", 1, -1, false, false,
         double_command},
        {"decompose", "Split an object into simple summands", "HOPF OBJECT", 2, 2, true, false, decompose_command},
        {"projective", "Projectivity through the free cover", "HOPF OBJECT", 2, 2, false, false,
         projective_command},
        {"semisimple-report", "Sampled semisimplicity verdict", "HOPF", 1, 1, true, true,
         semisimple_report_command},
        {"qybe", "Braiding, hexagons and the braid relation", "HOPF OBJECT", 2, 2, false, false, qybe_command},
        {"adjunction-check", "Tensor-hom adjunction bijection", "HOPF M N P", 4, 4, false, false,
         adjunction_check_command},
    };
    return table;
}

/// Runs the command line and writes the report; returns the exit code.
/// Arguments are validated before any input file is opened.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    if (argc > 1 && argv[1][0] != '-' &&
        std::ranges::none_of(verbs(), [&](const Verb& v) { return std::string(v.name) == argv[1]; })) {
        err << "ydlab: unknown verb '" << argv[1] << "'\n";
        return kExitInputError;
    }
    CLI::App app{"Exact computations with Yetter-Drinfeld and Long objects", "ydlab"};
    app.require_subcommand(1);
    Options opts;
    std::string kind;
    const Verb* chosen = nullptr;
    for (const auto& v : verbs()) {
        auto* sub = app.add_subcommand(v.name, v.summary);
        sub->add_option("inputs", opts.inputs, v.inputs)->required()->expected(v.min_inputs, v.max_inputs);
        sub->add_option("--kind", kind, "Object kind")->check(CLI::IsMember({"yd", "long"}));
        sub->add_option("--field", opts.field, "Field override: q, gf:P or GF(P)");
        sub->add_flag("--machine", opts.machine, "Structured JSON report");
        if (v.seed) sub->add_option("--seed", opts.seed, "Seed for randomized search");
        if (v.dims) sub->add_option("--dims", opts.dims, "Largest enumerated object dimension")->check(CLI::Range(1, 8));
        sub->callback([&opts, &chosen, &v] {
            opts.verb = v.name;
            chosen = &v;
        });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "ydlab: " << e.what() << '\n';
        return kExitInputError;
    }
    if (!kind.empty()) opts.kind = parse_kind(kind);

    Outcome result;
    try {
        result = chosen->run(opts);
    } catch (const Error& e) {
        result = error_outcome(opts.verb, std::string(errc_name(e.code())), e.what(),
                               e.is_input_error() ? kExitInputError : kExitCheckFailed);
    } catch (const nlohmann::json::exception& e) {
        result = error_outcome(opts.verb, "ParseError", e.what(), kExitInputError);
    } catch (const std::exception& e) {
        result = error_outcome(opts.verb, "Internal", e.what(), kExitCheckFailed);
    }

    if (opts.machine)
        out << result.report.dump(2) << '\n';
    else if (opts.verb == "construct" && result.exit_code == kExitOk)
        out << result.report["object"].dump(2) << '\n';
    else
        render_human(out, result.report);
    if (result.report["status"] == "error") err << "ydlab: " << result.report["error"]["message"].get<std::string>() << '\n';
    return result.exit_code;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"ydlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ydlab::cli
