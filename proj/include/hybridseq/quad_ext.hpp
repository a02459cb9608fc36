#pragma once

#include <ostream>
#include <string>

#include "hybridseq/error.hpp"
#include "hybridseq/rational.hpp"

namespace hybridseq {

/// p + q*sqrt(D) in the formal extension Q(sqrt(D)), with (sqrt D)^2 = D taken
/// as a defining relation. D may be negative or a perfect square; only D = 0
/// is rejected. Operands with different radicands never mix.
class QuadExt {
public:
    QuadExt(Rational rat, Rational rad, Rational radicand)
        : rat_(std::move(rat)), rad_(std::move(rad)), radicand_(std::move(radicand)) {
        if (radicand_.is_zero()) throw invalid_parameters("quadratic extension needs a nonzero radicand");
    }

    static QuadExt rational(Rational p, const Rational& radicand) { return {std::move(p), 0, radicand}; }
    static QuadExt sqrt_of(const Rational& radicand) { return {0, 1, radicand}; }

    const Rational& rat() const { return rat_; }
    const Rational& rad() const { return rad_; }
    const Rational& radicand() const { return radicand_; }

    bool is_rational() const { return rad_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }

    /// p - q*sqrt(D); the image under sqrt(D) -> -sqrt(D).
    QuadExt conjugate() const { return {rat_, -rad_, radicand_}; }

    /// p^2 - q^2 D.
    Rational field_norm() const { return rat_ * rat_ - rad_ * rad_ * radicand_; }

    QuadExt operator-() const { return {-rat_, -rad_, radicand_}; }

    QuadExt& operator+=(const QuadExt& o) {
        check(o);
        rat_ += o.rat_;
        rad_ += o.rad_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        check(o);
        rat_ -= o.rat_;
        rad_ -= o.rad_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        check(o);
        Rational p = rat_ * o.rat_ + rad_ * o.rad_ * radicand_;
        Rational q = rat_ * o.rad_ + rad_ * o.rat_;
        rat_ = std::move(p);
        rad_ = std::move(q);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    QuadExt& operator+=(const Rational& s) { rat_ += s; return *this; }
    QuadExt& operator-=(const Rational& s) { rat_ -= s; return *this; }
    QuadExt& operator*=(const Rational& s) {
        rat_ *= s;
        rad_ *= s;
        return *this;
    }
    QuadExt& operator/=(const Rational& s) {
        if (s.is_zero()) throw division_by_zero();
        rat_ /= s;
        rad_ /= s;
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator+(QuadExt x, const Rational& s) { return x += s; }
    friend QuadExt operator-(QuadExt x, const Rational& s) { return x -= s; }
    friend QuadExt operator*(QuadExt x, const Rational& s) { return x *= s; }
    friend QuadExt operator*(const Rational& s, QuadExt x) { return x *= s; }
    friend QuadExt operator/(QuadExt x, const Rational& s) { return x /= s; }

    /// (p - q sqrt D) / (p^2 - q^2 D).
    QuadExt inverse() const {
        Rational n = field_norm();
        if (n.is_zero()) {
            if (is_zero()) throw division_by_zero();
            throw degenerate_extension("p^2 = q^2*D: " + str() + " is a zero divisor of the split extension with D = " +
                                       radicand_.str());
        }
        return {rat_ / n, -rad_ / n, radicand_};
    }

    /// Componentwise equality; radicands must agree.
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        x.check(y);
        return x.rat_ == y.rat_ && x.rad_ == y.rad_;
    }

    std::string str() const {
        if (rad_.is_zero()) return rat_.str();
        std::string s = rat_.is_zero() ? std::string() : rat_.str() + (rad_.sign() < 0 ? " - " : " + ");
        Rational mag = (rat_.is_zero() || rad_.sign() > 0) ? rad_ : -rad_;
        s += mag.str() + "*sqrt(" + radicand_.str() + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

private:
    void check(const QuadExt& o) const {
        if (radicand_ != o.radicand_) throw radicand_mismatch();
    }

    Rational rat_;
    Rational rad_;
    Rational radicand_;
};

inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
inline QuadExt quad_inv(const QuadExt& x) { return x.inverse(); }

/// Binary exponentiation, n >= 0.
inline QuadExt quad_pow(QuadExt x, long n) {
    if (n < 0) throw std::invalid_argument("quad_pow: negative exponent");
    QuadExt result = QuadExt::rational(1, x.radicand());
    while (n > 0) {
        if (n & 1) result *= x;
        n >>= 1;
        if (n > 0) x *= x;
    }
    return result;
}

}  // namespace hybridseq
