#pragma once

#include <random>

#include "ydlab/decomp/complement.hpp"
#include "ydlab/linalg/polynomial.hpp"

namespace ydlab {

/// Seed for every randomized search in decomposition; callers may override.
inline constexpr std::uint64_t kDefaultSeed = 20260915;

/// Above this many vectors the exhaustive scan gives way to the test-set search.
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

/// Outcome of a simplicity check of a subobject W. `exhaustive` certificates
/// cover every nonzero vector of W; the others are flagged heuristic.
template <ExactField F>
struct SimplicityCertificate {
    bool simple = false;
    bool exhaustive = false;
    std::uint64_t vectors_covered = 0;
    std::optional<Subspace<F>> proper;  // a proper nonzero subobject when not simple
    std::string method;
};

namespace detail {

/// q^n if it does not exceed `cap`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t n, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > cap / q) return std::nullopt;
        r *= q;
    }
    return r;
}

/// Calls fn(coords) once per projective point of k^n: coordinate vectors
/// whose first nonzero entry is 1, in lexicographic order of field indices.
template <FiniteField F, class Fn>
void for_each_line(const F& k, std::size_t n, Fn&& fn) {
    const auto q = k.order();
    for (std::size_t lead = n; lead-- > 0;) {
        // coordinates before `lead` are zero, `lead` is one, the rest vary
        const auto tail = n - lead - 1;
        std::vector<std::uint64_t> idx(tail, 0);
        for (;;) {
            Vector<F> c(n, k.zero());
            c[lead] = k.one();
            for (std::size_t t = 0; t < tail; ++t) c[lead + 1 + t] = k.element(idx[t]);
            fn(c);
            std::size_t t = 0;
            while (t < tail && ++idx[t] == q) idx[t++] = 0;
            if (t == tail) break;
        }
    }
}

template <ExactField F>
void keep_smaller(std::optional<Subspace<F>>& best, const Subspace<F>& s) {
    if (!best || s.echelon_less(*best, s.field())) best = s;
}

/// Proper nonzero subobjects of W from the test set: basis vectors of W,
/// then their pairwise sums, in order. Returns the minimal one.
template <ExactField F>
std::optional<Subspace<F>> test_set_search(const Object<F>& m, const Subspace<F>& w) {
    std::optional<Subspace<F>> best;
    const auto& b = w.basis();
    auto consider = [&](const Vector<F>& v) {
        auto s = generated_subobject(m, {v});
        if (s.dim() < w.dim()) keep_smaller(best, s);
    };
    for (const auto& v : b) consider(v);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            auto v = b[i];
            for (std::size_t r = 0; r < v.size(); ++r) v[r] += b[j][r];
            consider(v);
        }
    return best;
}

/// Restriction of the structure maps to W, acting on coordinates.
template <ExactField F>
std::vector<Matrix<F>> restricted_generators(const Object<F>& m, const Subspace<F>& w) {
    const auto basis = w.column_basis(), coords = w.coordinate_map();
    std::vector<Matrix<F>> out;
    for (const auto& g : structure_generators(m)) out.push_back(coords * g * basis);
    return out;
}

/// A kernel ker f(X) for a random X commuting with the structure on W and an
/// irreducible factor f of its minimal polynomial, when that kernel is a
/// proper nonzero subspace (it is then a subobject). Unsupported
/// factorizations give nullopt.
template <ExactField F>
std::optional<Subspace<F>> commutant_split(const Object<F>& m, const Subspace<F>& w, std::mt19937_64& rng) {
    const auto& k = m.field();
    const auto n = w.dim();
    if (n < 2) return std::nullopt;
    const auto id = Matrix<F>::identity(k, n);
    std::vector<Matrix<F>> blocks;
    for (const auto& g : restricted_generators(m, w)) blocks.push_back(kron(id, g.transpose()) - kron(g, id));
    auto comm = kernel(vstack(k, n * n, blocks));
    Matrix<F> x(k, n, n);
    for (const auto& row : comm.basis())
        x.add_scaled(k.random(rng), unflatten(k, n, n, std::span<const scalar_t<F>>(row)));
    try {
        for (const auto& fa : minpoly_split(x)) {
            auto ker = kernel(fa.poly.evaluate(x));
            if (ker.dim() > 0 && ker.dim() < n) {
                std::vector<Vector<F>> vs;
                for (const auto& c : ker.basis()) vs.push_back(w.combine(c));
                return Subspace<F>::span(k, m.dim(), vs);
            }
        }
    } catch (const Error& e) {
        if (e.code() != Errc::Unsupported) throw;
    }
    return std::nullopt;
}

}  // namespace detail

/// Whether the subobject W of M has no proper nonzero subobjects.
template <ExactField F>
SimplicityCertificate<F> is_simple(const Object<F>& m, const Subspace<F>& w, std::uint64_t seed = kDefaultSeed) {
    require(is_subobject(m, w), Errc::NotASubobject, "W is not invariant under the structure maps");
    SimplicityCertificate<F> cert;
    if (w.dim() == 0) {
        cert.method = "zero";
        return cert;
    }
    if constexpr (FiniteField<F>) {
        const auto& k = m.field();
        const auto q = k.order();
        if (auto total = detail::bounded_power(q, w.dim(), kExhaustiveLimit)) {
            // full scan, tracking the smallest proper subobject for a stable witness
            std::uint64_t lines = 0;
            detail::for_each_line(k, w.dim(), [&](const Vector<F>& c) {
                ++lines;
                auto s = generated_subobject(m, {w.combine(c)});
                if (s.dim() < w.dim()) detail::keep_smaller(cert.proper, s);
            });
            cert.exhaustive = true;
            cert.vectors_covered = lines * (q - 1);
            cert.simple = !cert.proper;
            cert.method = "exhaustive";
            return cert;
        }
    }
    cert.method = "heuristic";
    cert.proper = detail::test_set_search(m, w);
    if (!cert.proper) {
        std::mt19937_64 rng(seed);
        cert.proper = detail::commutant_split(m, w, rng);
    }
    cert.simple = !cert.proper;
    return cert;
}

template <ExactField F>
SimplicityCertificate<F> is_simple(const Object<F>& m, std::uint64_t seed = kDefaultSeed) {
    return is_simple(m, Subspace<F>::full(m.field(), m.dim()), seed);
}

}  // namespace ydlab
