#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "hybridseq/error.hpp"

namespace hybridseq {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero();
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw division_by_zero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p", "p/q" with decimal integers; rejects zero denominators.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        auto valid_int = [](std::string_view t) {
            if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
            if (t.empty()) return false;
            for (char ch : t)
                if (ch < '0' || ch > '9') return false;
            return true;
        };
        auto strip_plus = [](std::string t) {
            if (!t.empty() && t.front() == '+') t.erase(0, 1);
            return t;
        };
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw parse_error("not a rational: '" + s + "'");
            return Rational(mpq_class(mpz_class(strip_plus(s), 10)));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den.front() == '-')
            throw parse_error("not a rational: '" + s + "'");
        mpz_class d(strip_plus(den), 10);
        if (d == 0) throw division_by_zero();
        return Rational(mpz_class(strip_plus(num), 10), d);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return q_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = cmp(x.q_, y.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1) / q_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

/// x^e for any integer e; negative exponents require x != 0.
inline Rational pow(const Rational& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
inline Rational binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

enum class RatOp { add, sub, mul, div };

inline Rational rat_arith(const Rational& x, const Rational& y, RatOp op) {
    switch (op) {
        case RatOp::add: return x + y;
        case RatOp::sub: return x - y;
        case RatOp::mul: return x * y;
        case RatOp::div: return x / y;
    }
    throw std::logic_error("unreachable");
}

}  // namespace hybridseq

template <>
struct std::hash<hybridseq::Rational> {
    std::size_t operator()(const hybridseq::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
