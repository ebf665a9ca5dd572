#pragma once

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "ydlab/error.hpp"

namespace ydlab {

// ---------------------------------------------------------------------------
// GF(p)
// ---------------------------------------------------------------------------

/// Element of a prime field. The modulus travels with the value so that the
/// arithmetic operators are self-contained; mixing moduli is a logic error.
class Fp {
public:
    constexpr Fp() = default;
    constexpr Fp(std::uint32_t value, std::uint32_t modulus) : v_(value % modulus), p_(modulus) {}

    constexpr std::uint32_t value() const noexcept { return v_; }
    constexpr std::uint32_t modulus() const noexcept { return p_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr Fp operator+(Fp a, Fp b) noexcept {
        std::uint32_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend constexpr Fp operator-(Fp a, Fp b) noexcept {
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend constexpr Fp operator*(Fp a, Fp b) noexcept {
        return raw(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_), a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    constexpr Fp operator-() const noexcept { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(Fp o) noexcept { return *this = *this + o; }
    Fp& operator-=(Fp o) noexcept { return *this = *this - o; }
    Fp& operator*=(Fp o) noexcept { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    friend constexpr bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }

    Fp inverse() const {
        require(v_ != 0, Errc::Unsupported, "division by zero in GF(p)");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return raw(static_cast<std::uint32_t>(t), p_);
    }

private:
    static constexpr Fp raw(std::uint32_t v, std::uint32_t p) noexcept {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 1;
};

constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class PrimeField {
public:
    using element_type = Fp;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!(p < (1u << 31) && is_prime(p)))
            fail(Errc::ParseError, "GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::uint64_t order() const noexcept { return p_; }

    Fp zero() const noexcept { return Fp(0, p_); }
    Fp one() const noexcept { return Fp(1, p_); }
    Fp from_int(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return Fp(static_cast<std::uint32_t>(r), p_);
    }
    /// i-th element in canonical order 0..p-1.
    Fp element(std::uint64_t i) const noexcept { return Fp(static_cast<std::uint32_t>(i), p_); }

    /// Accepts canonical "k", negative integers and "a/b" fractions.
    Fp parse(std::string_view text) const {
        auto slash = text.find('/');
        if (slash != std::string_view::npos)
        {
            auto den = parse(text.substr(slash + 1));
            if (den.is_zero()) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
            return parse(text.substr(0, slash)) / den;
        }
        std::int64_t n = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
        if (!(ec == std::errc{} && ptr == text.data() + text.size()))
            fail(Errc::ParseError, "bad GF(" + std::to_string(p_) + ") scalar '" + std::string(text) + "'");
        return from_int(n);
    }
    std::string format(Fp x) const { return std::to_string(x.value()); }

    template <class Rng>
    Fp random(Rng& rng) const {
        return Fp(static_cast<std::uint32_t>(rng() % p_), p_);
    }

    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

/// Rational number; GMP keeps numerator/denominator coprime with a positive
/// denominator after every operation.
class Rational {
public:
    Rational() = default;
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(long n) : q_(n) {}

    const mpq_class& get() const noexcept { return q_; }
    bool is_zero() const noexcept { return sgn(q_) == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(!b.is_zero(), Errc::Unsupported, "division by zero in Q");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

private:
    mpq_class q_;
};

class RationalField {
public:
    using element_type = Rational;

    std::uint64_t characteristic() const noexcept { return 0; }
    Rational zero() const { return Rational(0L); }
    Rational one() const { return Rational(1L); }
    Rational from_int(std::int64_t n) const { return Rational(static_cast<long>(n)); }

    Rational parse(std::string_view text) const {
        std::string s(text);
        auto valid = !s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos;
        mpq_class q;
        if (!(valid && q.set_str(s, 10) == 0)) fail(Errc::ParseError, "bad rational scalar '" + s + "'");
        if (q.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
        return Rational(q);
    }
    std::string format(const Rational& x) const { return x.get().get_str(); }

    /// Small integers suffice for the seeded generic elements used by searches.
    template <class Rng>
    Rational random(Rng& rng) const {
        return from_int(static_cast<std::int64_t>(rng() % 19) - 9);
    }

    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

// ---------------------------------------------------------------------------
// Concepts
// ---------------------------------------------------------------------------

template <class F>
concept ExactField = requires(const F f, const typename F::element_type a, std::int64_t i, std::string_view s,
                              std::mt19937_64 rng) {
    typename F::element_type;
    { f.zero() } -> std::same_as<typename F::element_type>;
    { f.one() } -> std::same_as<typename F::element_type>;
    { f.from_int(i) } -> std::same_as<typename F::element_type>;
    { f.parse(s) } -> std::same_as<typename F::element_type>;
    { f.format(a) } -> std::convertible_to<std::string>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.random(rng) } -> std::same_as<typename F::element_type>;
    { f.name() } -> std::convertible_to<std::string>;
    { a + a } -> std::convertible_to<typename F::element_type>;
    { a - a } -> std::convertible_to<typename F::element_type>;
    { a * a } -> std::convertible_to<typename F::element_type>;
    { a / a } -> std::convertible_to<typename F::element_type>;
    { -a } -> std::convertible_to<typename F::element_type>;
    { a == a } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

template <class F>
concept FiniteField = ExactField<F> && requires(const F f, std::uint64_t i) {
    { f.order() } -> std::convertible_to<std::uint64_t>;
    { f.element(i) } -> std::same_as<typename F::element_type>;
};

template <ExactField F>
using scalar_t = typename F::element_type;

}  // namespace ydlab
