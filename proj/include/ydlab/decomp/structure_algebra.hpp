#pragma once

#include <deque>

#include "ydlab/compat/conditions.hpp"

namespace ydlab {

/// Basis of the unital subalgebra of End(k^d) generated by `generators`, in
/// echelon form of the row-major flattening.
template <ExactField F>
std::vector<Matrix<F>> algebra_closure(const F& k, std::size_t d, const std::vector<Matrix<F>>& generators) {
    EchelonBuilder<F> span(k, d * d);
    std::deque<Matrix<F>> frontier;
    auto offer = [&](Matrix<F> m) {
        if (span.insert(flatten(m))) frontier.push_back(std::move(m));
    };
    offer(Matrix<F>::identity(k, d));
    while (!frontier.empty()) {
        auto m = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) offer(g * m);
    }
    std::vector<Matrix<F>> basis;
    const auto sub = Subspace<F>::from_builder(span);
    for (const auto& row : sub.basis())
        basis.push_back(unflatten(k, d, d, std::span<const scalar_t<F>>(row)));
    return basis;
}

/// The endomorphisms of M generated by the action operators L_i and the
/// coaction components C_a; its invariant subspaces are the subobjects.
template <ExactField F>
struct StructureAlgebra {
    ObjectPtr<F> object;
    std::vector<Matrix<F>> generators;
    std::vector<Matrix<F>> basis;

    std::size_t dim() const noexcept { return basis.size(); }

    Subspace<F> span() const {
        const auto d = object->dim();
        std::vector<Vector<F>> rows;
        for (const auto& b : basis) rows.push_back(flatten(b));
        return Subspace<F>::span(object->field(), d * d, rows);
    }

    bool contains(const Matrix<F>& m) const { return span().contains(flatten(m)); }
};

template <ExactField F>
std::vector<Matrix<F>> structure_generators(const Object<F>& m) {
    std::vector<Matrix<F>> gens;
    if (m.has_action()) gens = m.module().ops();
    if (m.has_coaction())
        for (const auto& c : m.comodule().comps()) gens.push_back(c);
    return gens;
}

template <ExactField F>
StructureAlgebra<F> structure_algebra(const ObjectPtr<F>& m) {
    auto gens = structure_generators(*m);
    auto basis = algebra_closure(m->field(), m->dim(), gens);
    return {m, std::move(gens), std::move(basis)};
}

template <ExactField F>
bool is_subobject(const Object<F>& m, const Subspace<F>& w) {
    require(w.ambient() == m.dim(), Errc::DimensionMismatch, "subspace is not inside the object");
    for (const auto& g : structure_generators(m))
        if (!w.is_invariant_under(g)) return false;
    return true;
}

/// Smallest subobject containing `vectors`.
template <ExactField F>
Subspace<F> generated_subobject(const Object<F>& m, const std::vector<Vector<F>>& vectors) {
    const auto gens = structure_generators(m);
    EchelonBuilder<F> span(m.field(), m.dim());
    std::deque<Vector<F>> frontier;
    for (const auto& v : vectors)
        if (span.insert(v)) frontier.push_back(v);
    while (!frontier.empty() && span.dim() < m.dim()) {
        auto v = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            auto w = g.apply(v);
            if (span.insert(w)) frontier.push_back(std::move(w));
        }
    }
    return Subspace<F>::from_builder(span);
}

/// The structure induced on a subobject, in the echelon basis of `w`.
template <ExactField F>
Object<F> restrict_to(const Object<F>& m, const Subspace<F>& w) {
    require(is_subobject(m, w), Errc::NotASubobject, "subspace is not invariant under the structure maps");
    const auto basis = w.column_basis(), coords = w.coordinate_map();
    std::optional<ModuleStructure<F>> mod;
    std::optional<ComoduleStructure<F>> com;
    if (m.has_action()) {
        std::vector<Matrix<F>> ops;
        for (const auto& op : m.module().ops()) ops.push_back(coords * op * basis);
        mod.emplace(m.hopf(), w.dim(), std::move(ops));
    }
    if (m.has_coaction()) {
        std::vector<Matrix<F>> comps;
        for (const auto& c : m.comodule().comps()) comps.push_back(coords * c * basis);
        com.emplace(m.hopf(), w.dim(), std::move(comps));
    }
    return Object<F>(std::move(mod), std::move(com), m.kind());
}

}  // namespace ydlab
