#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ydlab/linalg/subspace.hpp"

namespace ydlab {

/// Univariate polynomial, coefficients stored low degree first with no
/// trailing zeros (the zero polynomial has no coefficients).
template <ExactField F>
class Polynomial {
public:
    using Scalar = scalar_t<F>;

    explicit Polynomial(F field) : field_(std::move(field)) {}
    Polynomial(F field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const F& field, Scalar a) { return Polynomial(field, {a}); }
    static Polynomial x(const F& field) { return Polynomial(field, {field.zero(), field.one()}); }
    /// x - a
    static Polynomial linear(const F& field, const Scalar& a) { return Polynomial(field, {-a, field.one()}); }
    static Polynomial from_ints(const F& field, std::initializer_list<long> coeffs) {
        std::vector<Scalar> c;
        for (long v : coeffs) c.push_back(field.from_int(v));
        return Polynomial(field, std::move(c));
    }

    const F& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Scalar leading() const { return c_.empty() ? field_.zero() : c_.back(); }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        auto inv = field_.one() / c_.back();
        auto out = c_;
        for (auto& x : out) x *= inv;
        return Polynomial(field_, std::move(out));
    }

    Polynomial derivative() const {
        std::vector<Scalar> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.from_int(static_cast<std::int64_t>(i)) * c_[i]);
        return Polynomial(field_, std::move(d));
    }

    Scalar evaluate(const Scalar& at) const {
        auto acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// Horner evaluation at a square matrix.
    Matrix<F> evaluate(const Matrix<F>& a) const {
        Matrix<F> acc(field_, a.rows(), a.cols());
        auto id = Matrix<F>::identity(field_, a.rows());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * a;
            acc.add_scaled(*it, id);
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(a.field_, std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(a.field_, std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(a.field_, std::move(c));
    }
    friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
        auto c = a.c_;
        for (auto& x : c) x *= s;
        return Polynomial(a.field_, std::move(c));
    }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        require(!b.is_zero(), Errc::Unsupported, "polynomial division by zero");
        const auto& field = a.field_;
        if (a.degree() < b.degree()) return {Polynomial(field), a};
        auto rem = a.c_;
        std::vector<Scalar> quo(a.c_.size() - b.c_.size() + 1, field.zero());
        auto inv = field.one() / b.c_.back();
        for (std::size_t k = quo.size(); k-- > 0;) {
            auto q = rem[k + b.c_.size() - 1] * inv;
            quo[k] = q;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
        }
        rem.resize(b.c_.size() - 1, field.zero());
        return {Polynomial(field, std::move(quo)), Polynomial(field, std::move(rem))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            bool unit = c_[i] == field_.one();
            if (!unit || i == 0) out += field_.format(c_[i]);
            if (i > 0) out += (unit ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    F field_;
    std::vector<Scalar> c_;
};

template <ExactField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <ExactField F>
Polynomial<F> pow_mod(Polynomial<F> base, std::uint64_t e, const Polynomial<F>& mod) {
    auto result = Polynomial<F>::constant(base.field(), base.field().one()) % mod;
    base = base % mod;
    while (e > 0) {
        if (e & 1) result = (result * base) % mod;
        e >>= 1;
        if (e) base = (base * base) % mod;
    }
    return result;
}

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependency among I, A, A^2, ...
template <ExactField F>
Polynomial<F> minimal_polynomial(const Matrix<F>& a) {
    require(a.is_square(), Errc::DimensionMismatch, "minimal polynomial of non-square matrix");
    const auto& field = a.field();
    const std::size_t n = a.rows();
    std::vector<Vector<F>> powers;
    auto current = Matrix<F>::identity(field, n);
    for (std::size_t k = 0; k <= n; ++k) {
        auto target = flatten(current);
        if (!powers.empty()) {
            auto basis = Matrix<F>::from_columns(field, n * n, powers);
            auto sol = solve_affine(basis, std::span<const scalar_t<F>>(target));
            if (auto* s = std::get_if<AffineSolution<F>>(&sol)) {
                std::vector<scalar_t<F>> c;
                for (const auto& x : s->particular) c.push_back(-x);
                c.push_back(field.one());
                return Polynomial<F>(field, std::move(c));
            }
        } else if (n == 0) {
            return Polynomial<F>::constant(field, field.one());
        }
        powers.push_back(std::move(target));
        current = current * a;
    }
    fail(Errc::Unsupported, "minimal polynomial search exceeded matrix size");
}

template <ExactField F>
struct Factor {
    Polynomial<F> poly;  // monic irreducible
    std::size_t multiplicity;
};

namespace detail {

/// Square-free decomposition f = prod g_i^i (Yun's algorithm with the
/// characteristic-p p-th root step). Input must be monic and nonconstant.
template <ExactField F>
std::vector<std::pair<Polynomial<F>, std::size_t>> squarefree_parts(const Polynomial<F>& f) {
    const auto& field = f.field();
    std::vector<std::pair<Polynomial<F>, std::size_t>> out;
    if (f.degree() <= 0) return out;
    auto df = f.derivative();
    if (df.is_zero()) {
        // char p and f = g(x^p) = g(x)^p
        const auto p = field.characteristic();
        std::vector<scalar_t<F>> root;
        for (std::size_t i = 0; i < f.coeffs().size(); i += p) root.push_back(f.coeffs()[i]);
        for (auto& [g, m] : squarefree_parts(Polynomial<F>(field, root))) out.emplace_back(g, m * p);
        return out;
    }
    auto c = gcd(f, df);
    auto w = f / c;
    std::size_t i = 1;
    while (w.degree() > 0) {
        auto y = gcd(w, c);
        auto fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        const auto p = field.characteristic();
        std::vector<scalar_t<F>> root;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
        for (auto& [g, m] : squarefree_parts(Polynomial<F>(field, root).monic())) out.emplace_back(g, m * p);
    }
    return out;
}

inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// Irreducible factors of a monic square-free polynomial over GF(p):
/// distinct-degree split, then trial division by enumerated monic candidates.
inline std::vector<Polynomial<PrimeField>> split_squarefree(const Polynomial<PrimeField>& f) {
    using P = Polynomial<PrimeField>;
    const auto& field = f.field();
    const std::uint64_t p = field.p();
    std::vector<P> out;
    std::vector<std::pair<P, int>> chunks;
    auto rest = f;
    auto h = P::x(field);
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = pow_mod(h, p, rest);
        auto g = gcd(h - P::x(field), rest);
        if (g.degree() > 0) {
            chunks.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) chunks.emplace_back(rest.monic(), rest.degree());

    for (auto& [chunk, d] : chunks) {
        if (chunk.degree() == d) {
            out.push_back(chunk);
            continue;
        }
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
            require(count <= kEnumerationCap, Errc::Unsupported,
                    "equal-degree split needs more than 10^6 candidates");
        }
        auto remaining = chunk;
        for (std::uint64_t idx = 0; idx < count && remaining.degree() > 0; ++idx) {
            std::vector<Fp> c;
            auto t = idx;
            for (int i = 0; i < d; ++i) {
                c.push_back(field.element(t % p));
                t /= p;
            }
            c.push_back(field.one());
            P cand(field, std::move(c));
            if ((remaining % cand).is_zero()) {
                out.push_back(cand);
                remaining = remaining / cand;
            }
        }
    }
    return out;
}

inline bool rational_square_root(const mpq_class& q, mpq_class& root) {
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = mpq_class(rn, rd);
    root.canonicalize();
    return true;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    require(n <= mpz_class("1000000000000"), Errc::Unsupported, "rational root search: coefficient too large");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// All rational roots of a nonzero polynomial over Q.
inline std::vector<Rational> rational_roots(const Polynomial<RationalField>& f) {
    std::vector<Rational> roots;
    if (f.degree() <= 0) return roots;
    // integer coefficients by clearing denominators
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) {
        mpz_class d = c.get().get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ic;
    for (const auto& c : f.coeffs()) ic.push_back(mpz_class(c.get() * l));
    std::size_t low = 0;
    while (ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0L));
    auto nums = positive_divisors(ic[low]);
    auto dens = positive_divisors(ic.back());
    std::vector<mpq_class> seen;
    for (const auto& a : nums)
        for (const auto& b : dens)
            for (int s : {1, -1}) {
                mpq_class cand(a * s, b);
                cand.canonicalize();
                if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
                seen.push_back(cand);
                if (f.evaluate(Rational(cand)).is_zero()) roots.push_back(Rational(cand));
            }
    return roots;
}

/// Splits a monic quartic over Q without rational roots into two quadratics
/// when possible (resolvent-cubic route); returns empty if irreducible.
inline std::vector<Polynomial<RationalField>> split_quartic(const Polynomial<RationalField>& f) {
    using P = Polynomial<RationalField>;
    RationalField Q;
    const mpq_class a = f.coeff(3).get(), b = f.coeff(2).get(), c = f.coeff(1).get(), d = f.coeff(0).get();
    // x = y - a/4 gives y^4 + p y^2 + q y + r
    const mpq_class s0 = a / 4;
    const mpq_class p = b - 3 * a * a / 8;
    const mpq_class q = c - a * b / 2 + a * a * a / 8;
    const mpq_class r = d - a * c / 4 + a * a * b / 16 - 3 * a * a * a * a / 256;

    auto back = [&](const mpq_class& lin, const mpq_class& cst) {
        // y^2 + lin*y + cst with y = x + a/4
        mpq_class c1 = lin + 2 * s0;
        mpq_class c0 = s0 * s0 + lin * s0 + cst;
        return P(Q, {Rational(c0), Rational(c1), Q.one()});
    };

    if (sgn(q) != 0) {
        P resolvent(Q, {Rational(mpq_class(-q * q)), Rational(mpq_class(p * p - 4 * r)), Rational(mpq_class(2 * p)),
                        Q.one()});
        for (const auto& z : rational_roots(resolvent)) {
            mpq_class s;
            if (sgn(z.get()) <= 0 || !rational_square_root(z.get(), s)) continue;
            mpq_class t = (p + z.get() - q / s) / 2;
            mpq_class u = (p + z.get() + q / s) / 2;
            return {back(s, t), back(-s, u)};
        }
        return {};
    }
    mpq_class disc = p * p - 4 * r, root;
    if (rational_square_root(disc, root)) {
        mpq_class alpha = (p + root) / 2, beta = (p - root) / 2;
        return {back(0, alpha), back(0, beta)};
    }
    mpq_class t;
    for (int sign : {1, -1}) {
        if (!rational_square_root(r, t)) break;
        mpq_class tt = sign * t;
        mpq_class s2 = 2 * tt - p, s;
        if (sgn(s2) > 0 && rational_square_root(s2, s)) return {back(s, tt), back(-s, tt)};
    }
    return {};
}

/// Irreducible factors over Q of a monic square-free polynomial; irreducible
/// residues of degree above 4 are out of reach and raise Unsupported.
inline std::vector<Polynomial<RationalField>> split_squarefree(const Polynomial<RationalField>& f) {
    using P = Polynomial<RationalField>;
    RationalField Q;
    std::vector<P> out;
    auto rest = f;
    for (const auto& root : rational_roots(f)) {
        out.push_back(P::linear(Q, root));
        rest = rest / P::linear(Q, root);
    }
    if (rest.degree() <= 0) return out;
    if (rest.degree() > 4)
        fail(Errc::Unsupported, "factorization over Q limited to degree 4 (residual degree " + std::to_string(rest.degree()) + ")");
    if (rest.degree() == 4) {
        auto parts = split_quartic(rest.monic());
        if (!parts.empty()) {
            out.insert(out.end(), parts.begin(), parts.end());
            return out;
        }
    }
    out.push_back(rest.monic());
    return out;
}

template <ExactField F>
bool poly_less(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& field = a.field();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        auto x = field.format(a.coeffs()[i]), y = field.format(b.coeffs()[i]);
        if (x != y) return x.size() != y.size() ? x.size() < y.size() : x < y;
    }
    return false;
}

}  // namespace detail

/// Irreducible factorization of a monic polynomial, factors sorted by degree
/// then coefficients.
template <ExactField F>
std::vector<Factor<F>> factor(const Polynomial<F>& f) {
    std::vector<Factor<F>> out;
    for (auto& [part, mult] : detail::squarefree_parts(f.monic()))
        for (auto& irr : detail::split_squarefree(part)) {
            auto it = std::find_if(out.begin(), out.end(), [&](const auto& fa) { return fa.poly == irr; });
            if (it != out.end())
                it->multiplicity += mult;
            else
                out.push_back({irr, mult});
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return detail::poly_less(a.poly, b.poly); });
    return out;
}

/// Distinct roots in GF(p), via gcd with x^p - x.
inline std::vector<Fp> roots(const Polynomial<PrimeField>& f) {
    using P = Polynomial<PrimeField>;
    std::vector<Fp> out;
    if (f.degree() <= 0) return out;
    const auto& field = f.field();
    auto m = f.monic();
    auto g = gcd(pow_mod(P::x(field), field.p(), m) - P::x(field), m);
    if (g.degree() <= 0) return out;
    for (const auto& lin : detail::split_squarefree(g)) out.push_back(-lin.coeff(0));
    std::sort(out.begin(), out.end(), [](Fp a, Fp b) { return a.value() < b.value(); });
    return out;
}

/// Distinct rational roots, in increasing order.
inline std::vector<Rational> roots(const Polynomial<RationalField>& f) {
    auto out = detail::rational_roots(f);
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a.get() < b.get(); });
    return out;
}

/// Minimal polynomial of `a` split into monic irreducible factors with multiplicities.
template <ExactField F>
std::vector<Factor<F>> minpoly_split(const Matrix<F>& a) {
    return factor(minimal_polynomial(a));
}

}  // namespace ydlab
