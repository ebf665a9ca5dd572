#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ydlab/hopf/hopf_algebra.hpp"

namespace ydlab {

/// Pass/fail outcome of an exact identity check with one line per failure.
struct CheckReport {
    bool passed = true;
    std::vector<std::string> failures;

    void fail(std::string what) {
        passed = false;
        failures.push_back(std::move(what));
    }
};

/// Left H-module on k^m: `op(i)` is the matrix of v -> e_i . v.
template <ExactField F>
class ModuleStructure {
public:
    ModuleStructure(HopfPtr<F> hopf, std::size_t dim, std::vector<Matrix<F>> ops)
        : hopf_(std::move(hopf)), dim_(dim), ops_(std::move(ops)) {
        require(ops_.size() == hopf_->dim(), Errc::DimensionMismatch, "action needs one operator per basis element");
        for (const auto& m : ops_)
            require(m.rows() == dim_ && m.cols() == dim_, Errc::DimensionMismatch, "action operator is not m x m");
    }

    /// From a[i][j] = coordinates of e_i . v_j.
    static ModuleStructure from_tensor(HopfPtr<F> hopf, std::size_t dim, const std::vector<std::vector<Vector<F>>>& a) {
        require(a.size() == hopf->dim(), Errc::DimensionMismatch, "action tensor needs dim H rows");
        std::vector<Matrix<F>> ops;
        for (const auto& row : a) {
            require(row.size() == dim, Errc::DimensionMismatch, "action tensor row length != object dim");
            ops.push_back(Matrix<F>::from_columns(hopf->field(), dim, row));
        }
        return ModuleStructure(std::move(hopf), dim, std::move(ops));
    }

    /// h . v = eps(h) v.
    static ModuleStructure trivial(HopfPtr<F> hopf, std::size_t dim) {
        std::vector<Matrix<F>> ops;
        for (std::size_t i = 0; i < hopf->dim(); ++i)
            ops.push_back(Matrix<F>::identity(hopf->field(), dim) * hopf->counit()[i]);
        return ModuleStructure(std::move(hopf), dim, std::move(ops));
    }

    /// H acting on itself by left multiplication.
    static ModuleStructure regular(HopfPtr<F> hopf) {
        std::vector<Matrix<F>> ops;
        for (std::size_t i = 0; i < hopf->dim(); ++i) ops.push_back(hopf->left_multiplication(i));
        auto n = hopf->dim();
        return ModuleStructure(std::move(hopf), n, std::move(ops));
    }

    const HopfPtr<F>& hopf() const noexcept { return hopf_; }
    const F& field() const { return hopf_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix<F>& op(std::size_t i) const { return ops_[i]; }
    const std::vector<Matrix<F>>& ops() const noexcept { return ops_; }

    /// Operator of an arbitrary element h of H.
    Matrix<F> op_of(std::span<const scalar_t<F>> h) const {
        Matrix<F> out(field(), dim_, dim_);
        for (std::size_t i = 0; i < ops_.size(); ++i) out.add_scaled(h[i], ops_[i]);
        return out;
    }

    friend bool operator==(const ModuleStructure& a, const ModuleStructure& b) {
        return a.dim_ == b.dim_ && a.ops_ == b.ops_;
    }

private:
    HopfPtr<F> hopf_;
    std::size_t dim_;
    std::vector<Matrix<F>> ops_;
};

/// Right H-comodule on k^m: rho(v) = sum_a comp(a) v (x) e_a.
template <ExactField F>
class ComoduleStructure {
public:
    ComoduleStructure(HopfPtr<F> hopf, std::size_t dim, std::vector<Matrix<F>> comps)
        : hopf_(std::move(hopf)), dim_(dim), comps_(std::move(comps)) {
        require(comps_.size() == hopf_->dim(), Errc::DimensionMismatch, "coaction needs one component per basis element");
        for (const auto& m : comps_)
            require(m.rows() == dim_ && m.cols() == dim_, Errc::DimensionMismatch, "coaction component is not m x m");
    }

    struct Term {
        std::size_t target;  // k in v_k (x) e_i
        std::size_t hopf_index;
        scalar_t<F> coeff;
    };

    /// From rho[j] = list of (k, i, c) meaning rho(v_j) = sum c v_k (x) e_i.
    static ComoduleStructure from_terms(HopfPtr<F> hopf, std::size_t dim, const std::vector<std::vector<Term>>& rho) {
        require(rho.size() == dim, Errc::DimensionMismatch, "coaction needs one term list per basis vector");
        std::vector<Matrix<F>> comps(hopf->dim(), Matrix<F>(hopf->field(), dim, dim));
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& t : rho[j]) {
                require(t.target < dim && t.hopf_index < hopf->dim(), Errc::DimensionMismatch,
                        "coaction index out of range");
                comps[t.hopf_index](t.target, j) += t.coeff;
            }
        return ComoduleStructure(std::move(hopf), dim, std::move(comps));
    }

    /// rho(v) = v (x) 1.
    static ComoduleStructure trivial(HopfPtr<F> hopf, std::size_t dim) {
        std::vector<Matrix<F>> comps;
        for (std::size_t a = 0; a < hopf->dim(); ++a)
            comps.push_back(Matrix<F>::identity(hopf->field(), dim) * hopf->unit()[a]);
        return ComoduleStructure(std::move(hopf), dim, std::move(comps));
    }

    /// (H, Delta).
    static ComoduleStructure regular(HopfPtr<F> hopf) {
        const auto n = hopf->dim();
        std::vector<Matrix<F>> comps(n, Matrix<F>(hopf->field(), n, n));
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : hopf->comult(i)) comps[t.right](t.left, i) += t.coeff;
        return ComoduleStructure(std::move(hopf), n, std::move(comps));
    }

    /// One-dimensional comodule v -> v (x) g for a grouplike g.
    static ComoduleStructure grouplike(HopfPtr<F> hopf, std::span<const scalar_t<F>> g) {
        std::vector<Matrix<F>> comps;
        for (std::size_t a = 0; a < hopf->dim(); ++a) comps.push_back(Matrix<F>(hopf->field(), 1, 1, {g[a]}));
        return ComoduleStructure(std::move(hopf), 1, std::move(comps));
    }

    const HopfPtr<F>& hopf() const noexcept { return hopf_; }
    const F& field() const { return hopf_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix<F>& comp(std::size_t a) const { return comps_[a]; }
    const std::vector<Matrix<F>>& comps() const noexcept { return comps_; }

    /// Sparse listing of rho(v_j).
    std::vector<Term> terms(std::size_t j) const {
        std::vector<Term> out;
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t a = 0; a < comps_.size(); ++a)
                if (!comps_[a](k, j).is_zero()) out.push_back({k, a, comps_[a](k, j)});
        return out;
    }

    /// (id (x) phi) rho for a functional phi on H.
    Matrix<F> comp_of(std::span<const scalar_t<F>> phi) const {
        Matrix<F> out(field(), dim_, dim_);
        for (std::size_t a = 0; a < comps_.size(); ++a) out.add_scaled(phi[a], comps_[a]);
        return out;
    }

    friend bool operator==(const ComoduleStructure& a, const ComoduleStructure& b) {
        return a.dim_ == b.dim_ && a.comps_ == b.comps_;
    }

private:
    HopfPtr<F> hopf_;
    std::size_t dim_;
    std::vector<Matrix<F>> comps_;
};

enum class Kind { Module, Comodule, YD, Long };

inline std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Module: return "module";
        case Kind::Comodule: return "comodule";
        case Kind::YD: return "yd";
        case Kind::Long: return "long";
    }
    return "?";
}

inline Kind parse_kind(const std::string& s) {
    if (s == "module") return Kind::Module;
    if (s == "comodule") return Kind::Comodule;
    if (s == "yd") return Kind::YD;
    if (s == "long") return Kind::Long;
    fail(Errc::ParseError, "unknown kind '" + s + "'");
}

/// A vector space carrying an H-action, an H-coaction, or both. YD and Long
/// objects carry both; the kind records which compatibility is claimed.
template <ExactField F>
class Object {
public:
    Object(std::optional<ModuleStructure<F>> module, std::optional<ComoduleStructure<F>> comodule, Kind kind)
        : module_(std::move(module)), comodule_(std::move(comodule)), kind_(kind) {
        require(module_ || comodule_, Errc::ShapeMismatch, "object has neither action nor coaction");
        bool needs_module = kind != Kind::Comodule;
        bool needs_comodule = kind != Kind::Module;
        if (needs_module && !module_)
            fail(Errc::ShapeMismatch, kind_name(kind) + " object needs an action");
        if (needs_comodule && !comodule_)
            fail(Errc::ShapeMismatch, kind_name(kind) + " object needs a coaction");
        if (module_ && comodule_) {
            require(module_->dim() == comodule_->dim(), Errc::DimensionMismatch, "action and coaction dims differ");
            require(module_->hopf() == comodule_->hopf() || same_structure(*module_->hopf(), *comodule_->hopf()),
                    Errc::ShapeMismatch, "action and coaction over different Hopf algebras");
        }
    }

    Object(ModuleStructure<F> module, ComoduleStructure<F> comodule, Kind kind)
        : Object(std::optional(std::move(module)), std::optional(std::move(comodule)), kind) {}

    /// eps-action and trivial coaction on k^m.
    static Object trivial(HopfPtr<F> hopf, std::size_t dim, Kind kind) {
        return Object(ModuleStructure<F>::trivial(hopf, dim), ComoduleStructure<F>::trivial(hopf, dim), kind);
    }

    Kind kind() const noexcept { return kind_; }
    const HopfPtr<F>& hopf() const { return module_ ? module_->hopf() : comodule_->hopf(); }
    const F& field() const { return hopf()->field(); }
    std::size_t dim() const { return module_ ? module_->dim() : comodule_->dim(); }
    bool has_action() const noexcept { return module_.has_value(); }
    bool has_coaction() const noexcept { return comodule_.has_value(); }

    const ModuleStructure<F>& module() const {
        require(module_.has_value(), Errc::KindMismatch, "object has no action");
        return *module_;
    }
    const ComoduleStructure<F>& comodule() const {
        require(comodule_.has_value(), Errc::KindMismatch, "object has no coaction");
        return *comodule_;
    }
    const Matrix<F>& act(std::size_t i) const { return module().op(i); }
    const Matrix<F>& coact(std::size_t a) const { return comodule().comp(a); }

    Object with_kind(Kind k) const { return Object(module_, comodule_, k); }

    friend bool operator==(const Object& a, const Object& b) {
        return a.kind_ == b.kind_ && a.module_ == b.module_ && a.comodule_ == b.comodule_;
    }

private:
    std::optional<ModuleStructure<F>> module_;
    std::optional<ComoduleStructure<F>> comodule_;
    Kind kind_;
};

template <ExactField F>
using ObjectPtr = std::shared_ptr<const Object<F>>;

template <ExactField F>
ObjectPtr<F> share(Object<F> o) {
    return std::make_shared<const Object<F>>(std::move(o));
}

/// Transports an object along an invertible change of basis: the new basis
/// vectors are the columns of `p`.
template <ExactField F>
Object<F> change_basis(const Object<F>& m, const Matrix<F>& p) {
    auto pinv = inverse(p);
    require(pinv.has_value(), Errc::NotBijective, "change of basis is singular");
    std::optional<ModuleStructure<F>> mod;
    std::optional<ComoduleStructure<F>> com;
    if (m.has_action()) {
        std::vector<Matrix<F>> ops;
        for (const auto& l : m.module().ops()) ops.push_back(*pinv * l * p);
        mod.emplace(m.hopf(), m.dim(), std::move(ops));
    }
    if (m.has_coaction()) {
        std::vector<Matrix<F>> comps;
        for (const auto& c : m.comodule().comps()) comps.push_back(*pinv * c * p);
        com.emplace(m.hopf(), m.dim(), std::move(comps));
    }
    return Object<F>(std::move(mod), std::move(com), m.kind());
}

/// Direct sum, block diagonal in the concatenated basis.
template <ExactField F>
Object<F> direct_sum(const Object<F>& a, const Object<F>& b) {
    require(a.kind() == b.kind(), Errc::KindMismatch, "direct sum of objects of different kinds");
    const auto m = a.dim(), n = b.dim();
    auto block = [&](const Matrix<F>& x, const Matrix<F>& y) {
        Matrix<F> out(a.field(), m + n, m + n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) out(i, j) = x(i, j);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(m + i, m + j) = y(i, j);
        return out;
    };
    std::optional<ModuleStructure<F>> mod;
    std::optional<ComoduleStructure<F>> com;
    if (a.has_action()) {
        std::vector<Matrix<F>> ops;
        for (std::size_t i = 0; i < a.hopf()->dim(); ++i) ops.push_back(block(a.act(i), b.act(i)));
        mod.emplace(a.hopf(), m + n, std::move(ops));
    }
    if (a.has_coaction()) {
        std::vector<Matrix<F>> comps;
        for (std::size_t i = 0; i < a.hopf()->dim(); ++i) comps.push_back(block(a.coact(i), b.coact(i)));
        com.emplace(a.hopf(), m + n, std::move(comps));
    }
    return Object<F>(std::move(mod), std::move(com), a.kind());
}

}  // namespace ydlab
