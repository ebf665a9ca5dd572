#pragma once

#include <stdexcept>

#include "ydlab/decomp/simple.hpp"

namespace ydlab {

template <ExactField F>
struct Summand {
    Subspace<F> space;
    SimplicityCertificate<F> certificate;
};

/// M as a direct sum of simple subobjects with the matching projections, or
/// the subobject at which splitting failed together with its certificate.
template <ExactField F>
struct DecompositionReport {
    std::vector<Summand<F>> summands;
    std::vector<Matrix<F>> projections;
    std::optional<NotSplit<F>> non_split;

    bool semisimple() const noexcept { return !non_split; }

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& s : summands) out.push_back(s.space.dim());
        return out;
    }
};

/// Checks a semisimple report against M: the summands are independent,
/// spanning subobjects and the projections are orthogonal idempotents
/// summing to the identity, commuting with the structure maps, with the
/// summands as images.
template <ExactField F>
CheckReport verify_decomposition(const Object<F>& m, const DecompositionReport<F>& r) {
    CheckReport out;
    const auto& k = m.field();
    const auto d = m.dim();
    if (!r.semisimple()) {
        out.fail("report carries a non-split witness");
        return out;
    }
    auto total = Subspace<F>::zero(k, d);
    std::size_t dims = 0;
    for (const auto& s : r.summands) {
        if (!is_subobject(m, s.space)) out.fail("summand is not a subobject");
        if (!s.certificate.simple) out.fail("summand is not certified simple");
        total = total + s.space;
        dims += s.space.dim();
    }
    if (dims != d || total.dim() != d) out.fail("summands are not independent and spanning");
    if (r.projections.size() != r.summands.size()) {
        out.fail("one projection per summand expected");
        return out;
    }
    const auto gens = structure_generators(m);
    auto sum = Matrix<F>(k, d, d);
    for (std::size_t i = 0; i < r.projections.size(); ++i) {
        const auto& e = r.projections[i];
        sum += e;
        if (!(e * e == e)) out.fail("projection " + std::to_string(i) + " is not idempotent");
        for (std::size_t j = 0; j < r.projections.size(); ++j)
            if (j != i && !(e * r.projections[j]).is_zero())
                out.fail("projections " + std::to_string(i) + ", " + std::to_string(j) + " are not orthogonal");
        for (const auto& g : gens)
            if (!(e * g == g * e)) out.fail("projection " + std::to_string(i) + " does not commute with the structure");
        if (!(Subspace<F>::column_span(e) == r.summands[i].space))
            out.fail("projection " + std::to_string(i) + " has the wrong image");
    }
    if (!(sum == Matrix<F>::identity(k, d))) out.fail("projections do not sum to the identity");
    return out;
}

namespace detail {

/// Smallest subobject generated by one vector of U, over the basis of U, the
/// pairwise sums, then kernel vectors of random elements of the structure
/// algebra (split by the factors of their minimal polynomials).
template <ExactField F>
Subspace<F> minimal_generated(const Object<F>& m, const Subspace<F>& u, const std::vector<Matrix<F>>& algebra,
                              std::mt19937_64& rng) {
    std::optional<Subspace<F>> best;
    auto consider = [&](const Vector<F>& v) { keep_smaller(best, generated_subobject(m, {v})); };
    const auto& b = u.basis();
    for (const auto& v : b) consider(v);
    for (std::size_t i = 0; i < b.size() && best->dim() > 1; ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            auto v = b[i];
            for (std::size_t r = 0; r < v.size(); ++r) v[r] += b[j][r];
            consider(v);
        }
    const auto& k = m.field();
    constexpr int kTries = 6;
    for (int t = 0; t < kTries && best->dim() > 1; ++t) {
        Matrix<F> a(k, m.dim(), m.dim());
        for (const auto& x : algebra) a.add_scaled(k.random(rng), x);
        try {
            for (const auto& fa : minpoly_split(a)) {
                auto ker = intersect(kernel(fa.poly.evaluate(a)), u);
                for (const auto& v : ker.basis()) consider(v);
            }
        } catch (const Error& e) {
            if (e.code() != Errc::Unsupported) throw;
        }
    }
    return *best;
}

}  // namespace detail

/// Splits off minimal subobjects one at a time: each is certified simple,
/// then a commuting projection onto it is solved for.
template <ExactField F>
DecompositionReport<F> decompose(const Object<F>& m, std::uint64_t seed = kDefaultSeed) {
    const auto& k = m.field();
    const auto d = m.dim();
    std::mt19937_64 rng(seed);
    const auto algebra = algebra_closure(k, d, structure_generators(m));
    DecompositionReport<F> report;
    auto rest = Subspace<F>::full(k, d);
    while (rest.dim() > 0) {
        auto w = detail::minimal_generated(m, rest, algebra, rng);
        auto cert = is_simple(m, w, seed);
        while (!cert.simple) {
            w = *cert.proper;
            cert = is_simple(m, w, seed);
        }
        auto split = find_complement(m, w);
        if (auto* ns = std::get_if<NotSplit<F>>(&split)) {
            report.summands.push_back({std::move(w), std::move(cert)});
            report.non_split = std::move(*ns);
            return report;
        }
        const auto& e = std::get<Matrix<F>>(split);
        rest = intersect(rest, kernel(e));
        report.summands.push_back({std::move(w), std::move(cert)});
    }
    if (d == 0) return report;

    // projections from the adapted basis
    std::vector<Vector<F>> cols;
    for (const auto& s : report.summands)
        for (const auto& v : s.space.basis()) cols.push_back(v);
    auto basis = Matrix<F>::from_columns(k, d, cols);
    auto inv = inverse(basis);
    if (!inv) throw std::logic_error("decompose: summands are dependent");
    std::size_t offset = 0;
    for (const auto& s : report.summands) {
        Matrix<F> block(k, d, d);
        for (std::size_t i = 0; i < s.space.dim(); ++i) block(offset + i, offset + i) = k.one();
        offset += s.space.dim();
        report.projections.push_back(basis * block * *inv);
    }
    auto check = verify_decomposition(m, report);
    if (!check.passed) throw std::logic_error("decompose: " + check.failures.front());
    return report;
}

}  // namespace ydlab
