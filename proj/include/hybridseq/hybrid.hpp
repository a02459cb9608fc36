#pragma once

#include <cmath>
#include <concepts>
#include <ostream>
#include <string>
#include <type_traits>

#include "hybridseq/quad_ext.hpp"
#include "hybridseq/rational.hpp"

namespace hybridseq {

/// A commutative scalar ring usable as hybrid coefficients.
template <class S>
concept Scalar = std::copyable<S> && requires(const S& x, const S& y) {
    { x + y } -> std::convertible_to<S>;
    { x - y } -> std::convertible_to<S>;
    { x * y } -> std::convertible_to<S>;
    { -x } -> std::convertible_to<S>;
    { x == y } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
};

/// k = re + i*i + eps*ε + h*h with i^2 = -1, ε^2 = 0, h^2 = 1, ih = -hi = ε + i.
/// Associative but not commutative.
template <Scalar S>
struct Hybrid {
    S re;
    S i;
    S eps;
    S h;

    Hybrid(S re_, S i_, S eps_, S h_) : re(std::move(re_)), i(std::move(i_)), eps(std::move(eps_)), h(std::move(h_)) {}

    bool is_zero() const { return re.is_zero() && i.is_zero() && eps.is_zero() && h.is_zero(); }
    bool is_scalar() const { return i.is_zero() && eps.is_zero() && h.is_zero(); }

    Hybrid operator-() const { return {-re, -i, -eps, -h}; }

    Hybrid& operator+=(const Hybrid& o) {
        re = re + o.re;
        i = i + o.i;
        eps = eps + o.eps;
        h = h + o.h;
        return *this;
    }
    Hybrid& operator-=(const Hybrid& o) {
        re = re - o.re;
        i = i - o.i;
        eps = eps - o.eps;
        h = h - o.h;
        return *this;
    }

    friend Hybrid operator+(Hybrid x, const Hybrid& y) { return x += y; }
    friend Hybrid operator-(Hybrid x, const Hybrid& y) { return x -= y; }

    // Product written out from the four-component formula, not a unit table.
    friend Hybrid operator*(const Hybrid& x, const Hybrid& y) {
        const S& a1 = x.re; const S& b1 = x.i; const S& c1 = x.eps; const S& d1 = x.h;
        const S& a2 = y.re; const S& b2 = y.i; const S& c2 = y.eps; const S& d2 = y.h;
        S b1d2 = b1 * d2;
        S d1b2 = d1 * b2;
        S b1c2 = b1 * c2;
        S c1b2 = c1 * b2;
        return {
            a1 * a2 - b1 * b2 + d1 * d2 + b1c2 + c1b2,
            a1 * b2 + b1 * a2 + b1d2 - d1b2,
            a1 * c2 + c1 * a2 + b1d2 - d1b2 + d1 * c2 - c1 * d2,
            a1 * d2 + d1 * a2 + c1b2 - b1c2,
        };
    }

    /// Componentwise scaling by anything that multiplies S from the left.
    template <class T>
        requires(!std::same_as<std::remove_cvref_t<T>, Hybrid>) && requires(const T& s, const S& x) {
            { s * x } -> std::convertible_to<S>;
        }
    friend Hybrid operator*(const T& s, const Hybrid& k) {
        return {s * k.re, s * k.i, s * k.eps, s * k.h};
    }
    template <class T>
        requires(!std::same_as<std::remove_cvref_t<T>, Hybrid>) && requires(const T& s, const S& x) {
            { s * x } -> std::convertible_to<S>;
        }
    friend Hybrid operator*(const Hybrid& k, const T& s) {
        return s * k;
    }

    friend bool operator==(const Hybrid& x, const Hybrid& y) {
        return x.re == y.re && x.i == y.i && x.eps == y.eps && x.h == y.h;
    }

    /// "a + b i + c ε + d h" with every coefficient printed.
    std::string str() const {
        auto part = [](const S& v) {
            if constexpr (std::same_as<S, QuadExt>) {
                return v.is_rational() ? v.str() : "(" + v.str() + ")";
            } else {
                return v.str();
            }
        };
        return part(re) + " + " + part(i) + " i + " + part(eps) + " ε + " + part(h) + " h";
    }

    friend std::ostream& operator<<(std::ostream& os, const Hybrid& k) { return os << k.str(); }
};

using RationalHybrid = Hybrid<Rational>;
using QuadHybrid = Hybrid<QuadExt>;

template <Scalar S>
Hybrid<S> hybrid_mul(const Hybrid<S>& x, const Hybrid<S>& y) {
    return x * y;
}

template <Scalar S>
Hybrid<S> hybrid_conj(const Hybrid<S>& k) {
    return {k.re, -k.i, -k.eps, -k.h};
}

/// Full product k * conj(k); its imaginary parts vanish for every k.
template <Scalar S>
Hybrid<S> character_product(const Hybrid<S>& k) {
    return k * hybrid_conj(k);
}

/// C(k) = k * conj(k), read off the real part.
template <Scalar S>
S hybrid_character(const Hybrid<S>& k) {
    return character_product(k).re;
}

/// a^2 + (b - c)^2 - c^2 - d^2 for k = a + bi + cε + dh.
template <Scalar S>
S character_closed_form(const Hybrid<S>& k) {
    S bc = k.i - k.eps;
    return k.re * k.re + bc * bc - k.eps * k.eps - k.h * k.h;
}

/// sqrt(|C(k)|) in double precision. Inexact; for display only.
inline double hybrid_norm_f64(const RationalHybrid& k) {
    return std::sqrt(std::fabs(hybrid_character(k).to_double()));
}

inline RationalHybrid rational_hybrid(Rational re, Rational i, Rational eps, Rational h) {
    return {std::move(re), std::move(i), std::move(eps), std::move(h)};
}

inline RationalHybrid real_hybrid(Rational re) { return {std::move(re), 0, 0, 0}; }

/// Embeds a rational hybrid number into Q(sqrt(radicand)).
inline QuadHybrid lift(const RationalHybrid& k, const Rational& radicand) {
    return {QuadExt::rational(k.re, radicand), QuadExt::rational(k.i, radicand), QuadExt::rational(k.eps, radicand),
            QuadExt::rational(k.h, radicand)};
}

/// Rational part of every component; precondition: all rad parts are zero.
inline RationalHybrid rational_part(const QuadHybrid& k) {
    return {k.re.rat(), k.i.rat(), k.eps.rat(), k.h.rat()};
}

inline bool all_rational(const QuadHybrid& k) {
    return k.re.is_rational() && k.i.is_rational() && k.eps.is_rational() && k.h.is_rational();
}

/// Image under sqrt(D) -> -sqrt(D), applied componentwise.
inline QuadHybrid radical_conjugate(const QuadHybrid& k) {
    return {k.re.conjugate(), k.i.conjugate(), k.eps.conjugate(), k.h.conjugate()};
}

}  // namespace hybridseq
