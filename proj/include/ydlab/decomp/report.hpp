#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "ydlab/compat/homs.hpp"
#include "ydlab/decomp/decompose.hpp"
#include "ydlab/decomp/radical.hpp"
#include "ydlab/double.hpp"
#include "ydlab/hopf/characters.hpp"

namespace ydlab {

enum class Verdict { ConsistentSemisimple, Counterexample, HypothesesFailNoWitness, Inconsistent };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ConsistentSemisimple: return "CONSISTENT-SEMISIMPLE";
        case Verdict::Counterexample: return "COUNTEREXAMPLE";
        case Verdict::HypothesesFailNoWitness: return "HYPOTHESES-FAIL-NO-WITNESS";
        case Verdict::Inconsistent: return "INCONSISTENT";
    }
    return "?";
}

/// Hypotheses under which every object splits into simples. Commutativity is
/// only asked of the yd kind; finite dimension gives noetherian.
struct Hypotheses {
    std::optional<bool> commutative;
    bool finite_dimensional = true;
    bool noetherian = true;
    bool semisimple = false;
    bool cosemisimple = false;

    bool hold() const noexcept { return commutative.value_or(true) && noetherian && semisimple && cosemisimple; }
};

/// Which objects the report decomposes. Objects of dimension up to
/// `enumeration_dim` come from enumeration (raw where the structure space is
/// small, otherwise as direct sums of 1-dim objects), constructed ones up to
/// `construction_dim`.
struct SampleSpec {
    std::size_t enumeration_dim = 2;
    std::size_t construction_dim = 8;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Raw enumeration runs only when each of the module and comodule structure
/// spaces has at most this many candidates.
inline constexpr std::uint64_t kRawEnumerationLimit = 100'000;

template <ExactField F>
struct SampleObject {
    std::string label;
    Object<F> object;
};

template <ExactField F>
struct SampleOutcome {
    std::string label;
    std::size_t dim = 0;
    bool semisimple = false;
    bool exhaustive = true;  // every simplicity certificate is exhaustive
    std::vector<std::size_t> summand_dims;
    std::vector<Object<F>> simples;
};

/// A non-split object written in a basis whose first vectors span W, with the
/// certificate recomputed in that basis.
template <ExactField F>
struct SplitFailure {
    std::size_t sample_index;
    std::string label;
    Object<F> object;
    NotSplit<F> certificate;
};

template <ExactField F>
struct SemisimplicityReport {
    Kind kind;
    Hypotheses hypotheses;
    SampleSpec spec;
    std::size_t one_dim_objects = 0;
    std::size_t one_dim_classes = 0;
    std::vector<SampleOutcome<F>> outcomes;
    std::vector<std::size_t> simple_class_dims;  // isomorphism classes among all simple summands
    std::optional<std::size_t> expected_simple_classes;
    std::optional<SplitFailure<F>> witness;
    Verdict verdict = Verdict::HypothesesFailNoWitness;
};

/// e_i acts by chi(e_i); v -> v (x) g.
template <ExactField F>
Object<F> one_dim_object(const HopfPtr<F>& h, const Vector<F>& chi, const Vector<F>& g, Kind kind) {
    std::vector<Matrix<F>> ops;
    for (const auto& c : chi) ops.push_back(Matrix<F>(h->field(), 1, 1, {c}));
    return Object<F>(ModuleStructure<F>(h, 1, std::move(ops)), ComoduleStructure<F>::grouplike(h, g), kind);
}

/// Nonzero morphisms between simple objects are isomorphisms.
template <ExactField F>
bool simples_isomorphic(const Object<F>& s, const Object<F>& t) {
    if (s.dim() != t.dim()) return false;
    if (s.dim() == 1) return s.module() == t.module() && s.comodule() == t.comodule();
    return colinear_homs(s, t).dim() > 0;
}

namespace detail {

template <ExactField F>
Matrix<F> random_invertible(const F& k, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix<F> m(k, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = k.random(rng);
        if (inverse(m)) return m;
    }
}

/// All tuples of `count` d x d matrices over GF(q), decoded from base-q digits.
template <FiniteField F>
std::vector<std::vector<Matrix<F>>> all_matrix_tuples(const F& k, std::size_t count, std::size_t d) {
    const auto q = k.order();
    const auto entries = count * d * d;
    const auto total = *bounded_power(q, entries, kRawEnumerationLimit);
    std::vector<std::vector<Matrix<F>>> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto x = idx;
        std::vector<Matrix<F>> tuple(count, Matrix<F>(k, d, d));
        for (auto& m : tuple)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    m(i, j) = k.element(x % q);
                    x /= q;
                }
        out.push_back(std::move(tuple));
    }
    return out;
}

template <ExactField F>
Object<F> tensor_of_kind(const Object<F>& m, const Object<F>& n, Kind kind) {
    return kind == Kind::YD ? tensor_yd(m, n) : tensor_long(m, n);
}

/// Combinations with repetition of `size` indices below n, in lexicographic order.
inline void multisets(std::size_t n, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(size, 0);
    if (n == 0) return;
    for (;;) {
        fn(idx);
        std::size_t t = size;
        while (t > 0 && idx[t - 1] == n - 1) --t;
        if (t == 0) return;
        ++idx[t - 1];
        for (std::size_t u = t; u < size; ++u) idx[u] = idx[t - 1];
    }
}

}  // namespace detail

/// The objects a report decomposes, in a fixed order: 1-dim objects,
/// constructed objects, raw enumeration, then direct sums of 1-dim objects.
/// Constructed objects and direct sums are moved to a seeded random basis.
template <ExactField F>
std::vector<SampleObject<F>> build_sample(const HopfPtr<F>& hp, Kind kind, const SampleSpec& spec,
                                          std::size_t* one_dim_count = nullptr) {
    require(kind == Kind::YD || kind == Kind::Long, Errc::KindMismatch, "reports are for yd or long objects");
    const auto& h = *hp;
    const auto& k = h.field();
    const auto n = h.dim();
    std::mt19937_64 rng(spec.seed);
    std::vector<SampleObject<F>> out;
    auto scrambled = [&](const Object<F>& o) { return change_basis(o, detail::random_invertible(k, o.dim(), rng)); };

    const auto chars = characters(h);
    const auto gs = grouplikes(h);
    std::vector<Object<F>> ones;
    for (std::size_t c = 0; c < chars.size(); ++c)
        for (std::size_t g = 0; g < gs.size(); ++g) {
            auto o = one_dim_object(hp, chars[c], gs[g], kind);
            if (!check_kind(o).passed) continue;
            out.push_back({"one-dim(chi" + std::to_string(c) + ",g" + std::to_string(g) + ")", o});
            ones.push_back(std::move(o));
        }
    if (one_dim_count) *one_dim_count = ones.size();

    const auto cd = spec.construction_dim;
    auto add = [&](std::string label, const Object<F>& o) {
        if (o.dim() > 0 && o.dim() <= cd) out.push_back({std::move(label), scrambled(o)});
    };
    std::optional<Object<F>> free_k;
    if (n <= cd) {
        free_k = free_object(hp, ComoduleStructure<F>::trivial(hp, 1), kind);
        add("free(k)", *free_k);
        for (std::size_t g = 0; g < gs.size(); ++g)
            if (!(gs[g] == h.unit())) add("free(k_g" + std::to_string(g) + ")", free_object(hp, ComoduleStructure<F>::grouplike(hp, gs[g]), kind));
    }
    if (n * n <= cd) add("free(H)", free_object(hp, ComoduleStructure<F>::regular(hp), kind));
    for (std::size_t i = 0; i < ones.size(); ++i) {
        const auto label = std::to_string(i);
        add("tensor(one" + label + ",one" + std::to_string((i + 1) % ones.size()) + ")",
            detail::tensor_of_kind(ones[i], ones[(i + 1) % ones.size()], kind));
        if (free_k && n + 1 <= cd) {
            add("tensor(one" + label + ",free(k))", detail::tensor_of_kind(ones[i], *free_k, kind));
            add("sum(one" + label + ",free(k))", direct_sum(ones[i], *free_k));
        }
    }
    if (free_k && 2 * n <= cd) add("sum(free(k),free(k))", direct_sum(*free_k, *free_k));
    if (free_k && n * n <= cd) add("tensor(free(k),free(k))", detail::tensor_of_kind(*free_k, *free_k, kind));
    if (h.is_commutative()) {
        for (std::size_t i = 0; i < ones.size(); ++i) {
            const auto label = std::to_string(i);
            add("hom(one" + label + ",one" + std::to_string((i + 1) % ones.size()) + ")",
                hom_object(ones[i], ones[(i + 1) % ones.size()], kind).object);
            if (free_k) add("hom(one" + label + ",free(k))", hom_object(ones[i], *free_k, kind).object);
        }
        if (free_k) add("hom(free(k),free(k))", hom_object(*free_k, *free_k, kind).object);
    }

    if constexpr (FiniteField<F>) {
        for (std::size_t d = 2; d <= spec.enumeration_dim; ++d) {
            if (!detail::bounded_power(k.order(), n * d * d, kRawEnumerationLimit)) break;
            std::vector<ModuleStructure<F>> mods;
            std::vector<ComoduleStructure<F>> coms;
            for (auto& t : detail::all_matrix_tuples(k, n, d)) {
                ModuleStructure<F> m(hp, d, t);
                if (verify_module(m).passed) mods.push_back(std::move(m));
                ComoduleStructure<F> c(hp, d, std::move(t));
                if (verify_comodule(c).passed) coms.push_back(std::move(c));
            }
            std::size_t idx = 0;
            for (const auto& m : mods)
                for (const auto& c : coms) {
                    Object<F> o(m, c, kind);
                    if (check_kind(o).passed) out.push_back({"enum" + std::to_string(d) + "#" + std::to_string(idx++), o});
                }
        }
    }

    for (std::size_t size = 2; size <= spec.enumeration_dim; ++size)
        detail::multisets(ones.size(), size, [&](const std::vector<std::size_t>& idx) {
            auto o = ones[idx.front()];
            std::string label = "sum(one" + std::to_string(idx.front());
            for (std::size_t t = 1; t < idx.size(); ++t) {
                o = direct_sum(o, ones[idx[t]]);
                label += ",one" + std::to_string(idx[t]);
            }
            out.push_back({label + ")", scrambled(o)});
        });
    return out;
}

namespace detail {

/// Basis of `w` followed by the unit vectors that complete it.
template <ExactField F>
Matrix<F> adapted_basis(const Subspace<F>& w) {
    const auto& k = w.field();
    EchelonBuilder<F> span(k, w.ambient());
    std::vector<Vector<F>> cols;
    for (const auto& v : w.basis()) {
        span.insert(v);
        cols.push_back(v);
    }
    for (std::size_t j = 0; j < w.ambient(); ++j) {
        auto e = unit_vector(k, w.ambient(), j);
        if (span.insert(e)) cols.push_back(std::move(e));
    }
    return Matrix<F>::from_columns(k, w.ambient(), cols);
}

template <ExactField F>
SampleOutcome<F> evaluate(const SampleObject<F>& s, std::uint64_t seed, std::optional<NotSplit<F>>& non_split) {
    SampleOutcome<F> out;
    out.label = s.label;
    out.dim = s.object.dim();
    auto r = decompose(s.object, seed);
    out.semisimple = r.semisimple();
    for (const auto& sm : r.summands) {
        out.summand_dims.push_back(sm.space.dim());
        out.exhaustive = out.exhaustive && sm.certificate.exhaustive;
    }
    if (r.semisimple())
        for (const auto& sm : r.summands) out.simples.push_back(restrict_to(s.object, sm.space));
    else
        non_split = std::move(r.non_split);
    return out;
}

}  // namespace detail

template <ExactField F>
Hypotheses evaluate_hypotheses(const HopfAlgebra<F>& h, Kind kind) {
    Hypotheses hyp;
    if (kind == Kind::YD) hyp.commutative = h.is_commutative();
    hyp.semisimple = is_semisimple(h);
    hyp.cosemisimple = is_cosemisimple(h);
    return hyp;
}

/// Decomposes every sample object (concurrently; results are kept in sample
/// order) and compares the outcome with the hypotheses.
template <ExactField F>
SemisimplicityReport<F> semisimplicity_report(const HopfPtr<F>& hp, Kind kind, const SampleSpec& spec = {}) {
    SemisimplicityReport<F> report;
    report.kind = kind;
    report.spec = spec;
    report.hypotheses = evaluate_hypotheses(*hp, kind);
    const auto sample = build_sample(hp, kind, spec, &report.one_dim_objects);

    const auto count = sample.size();
    std::vector<std::optional<SampleOutcome<F>>> outcomes(count);
    std::vector<std::optional<NotSplit<F>>> failures(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                outcomes[i] = detail::evaluate(sample[i], spec.seed + i, failures[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::vector<Object<F>> classes;
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        auto& o = *outcomes[i];
        if (i < report.one_dim_objects) {
            bool fresh = std::none_of(classes.begin(), classes.end(),
                                      [&](const auto& c) { return simples_isomorphic(c, sample[i].object); });
            if (fresh) ++report.one_dim_classes;
        }
        for (const auto& s : o.simples)
            if (std::none_of(classes.begin(), classes.end(), [&](const auto& c) { return simples_isomorphic(c, s); }))
                classes.push_back(s);
        o.simples.clear();
        if (failures[i] && !report.witness) {
            const auto& w = failures[i]->sub;
            auto adapted = change_basis(sample[i].object, detail::adapted_basis(w));
            std::vector<Vector<F>> first;
            for (std::size_t j = 0; j < w.dim(); ++j) first.push_back(unit_vector(hp->field(), adapted.dim(), j));
            auto redo = find_complement(adapted, Subspace<F>::span(hp->field(), adapted.dim(), first));
            auto* ns = std::get_if<NotSplit<F>>(&redo);
            if (!ns) throw std::logic_error("splitting depends on the basis");
            report.witness = SplitFailure<F>{i, sample[i].label, std::move(adapted), std::move(*ns)};
        }
        report.outcomes.push_back(std::move(o));
    }
    for (const auto& c : classes) report.simple_class_dims.push_back(c.dim());
    std::sort(report.simple_class_dims.begin(), report.simple_class_dims.end());

    if constexpr (FiniteField<F>) {
        auto algebra = kind == Kind::YD ? drinfeld_double(hp).hopf : long_algebra(hp).algebra;
        if (is_semisimple(*algebra)) report.expected_simple_classes = simple_class_count(*algebra);
    }

    const bool hold = report.hypotheses.hold();
    if (report.witness)
        report.verdict = hold ? Verdict::Inconsistent : Verdict::Counterexample;
    else
        report.verdict = hold ? Verdict::ConsistentSemisimple : Verdict::HypothesesFailNoWitness;
    return report;
}

}  // namespace ydlab
