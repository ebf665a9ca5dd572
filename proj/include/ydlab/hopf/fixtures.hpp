#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydlab/hopf/constructors.hpp"
#include "ydlab/hopf/dual.hpp"
#include "ydlab/hopf/io.hpp"

namespace ydlab {

/// Names of the built-in Hopf algebras, in the order the fixture files ship.
inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"gf2_c2", "q_c2",        "gf3_c3", "gf5_c4",
                                                   "gf7_s3", "gf5_c4_dual", "h4_gf5"};
    return names;
}

inline std::optional<AnyHopf> builtin_fixture(const std::string& name) {
    if (name == "gf2_c2") return share(cyclic_group_algebra(PrimeField(2), 2));
    if (name == "q_c2") return share(cyclic_group_algebra(RationalField{}, 2));
    if (name == "gf3_c3") return share(cyclic_group_algebra(PrimeField(3), 3));
    if (name == "gf5_c4") return share(cyclic_group_algebra(PrimeField(5), 4));
    if (name == "gf7_s3") return share(s3_group_algebra(PrimeField(7)));
    if (name == "gf5_c4_dual") return share(dual(cyclic_group_algebra(PrimeField(5), 4)));
    if (name == "h4_gf5") return share(sweedler_h4(PrimeField(5)));
    return std::nullopt;
}

/// A built-in fixture whose field type is known at compile time.
template <ExactField F>
HopfPtr<F> fixture(const std::string& name) {
    auto any = builtin_fixture(name);
    if (!any) fail(Errc::ParseError, "unknown fixture '" + name + "'");
    auto* p = std::get_if<HopfPtr<F>>(&*any);
    if (p == nullptr) fail(Errc::KindMismatch, "fixture '" + name + "' is over a different field");
    return *p;
}

}  // namespace ydlab
