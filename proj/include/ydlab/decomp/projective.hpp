#pragma once

#include "ydlab/compat/homs.hpp"

namespace ydlab {

/// A morphism s: M -> H (x) V with pi s = id for the free cover pi of M, if
/// one exists; M is then a direct summand of a free object.
template <ExactField F>
std::optional<Matrix<F>> projective_section(const ObjectPtr<F>& m, Kind kind) {
    return detail::cover_section(m, kind, true);
}

template <ExactField F>
bool is_projective(const ObjectPtr<F>& m, Kind kind) {
    return projective_section(m, kind).has_value();
}

}  // namespace ydlab
