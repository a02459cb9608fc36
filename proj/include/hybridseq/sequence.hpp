#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hybridseq/error.hpp"
#include "hybridseq/quad_ext.hpp"
#include "hybridseq/rational.hpp"

namespace hybridseq {

/// ξ(n) = n - 2*floor(n/2): 0 for even, 1 for odd, negative n included.
constexpr int parity(long n) { return static_cast<int>(((n % 2) + 2) % 2); }

/// floor(n/2) for any integer n.
constexpr long floor_half(long n) { return (n - parity(n)) / 2; }

/// (a, b, c, w0, w1) of w_n = χ(n) w_{n-1} + c w_{n-2}, χ(n) = a for even n and b for odd n.
struct RecurrenceParams {
    Rational a;
    Rational b;
    Rational c;
    Rational w0;
    Rational w1;

    /// Throws invalid_parameters unless a, b, c are all nonzero.
    static RecurrenceParams make(Rational a, Rational b, Rational c, Rational w0, Rational w1) {
        if (a.is_zero() || b.is_zero() || c.is_zero())
            throw invalid_parameters("a, b and c must be nonzero (got a=" + a.str() + ", b=" + b.str() +
                                     ", c=" + c.str() + ")");
        return {std::move(a), std::move(b), std::move(c), std::move(w0), std::move(w1)};
    }

    const Rational& chi(long n) const { return parity(n) == 0 ? a : b; }

    /// Δ² = a²b² + 4abc.
    Rational delta_sq() const { return a * a * b * b + Rational(4) * a * b * c; }

    /// Same (a, b, c) with new initial values.
    RecurrenceParams with_initial(Rational v0, Rational v1) const { return {a, b, c, std::move(v0), std::move(v1)}; }

    std::string str() const {
        return "(" + w0.str() + "," + w1.str() + ";" + a.str() + "," + b.str() + "," + c.str() + ")";
    }

    friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

enum class SeqKind { general, fibonacci_u, lucas_v, fibonacci_u_hat, lucas_v_hat };

inline const char* to_string(SeqKind k) {
    switch (k) {
        case SeqKind::general: return "general";
        case SeqKind::fibonacci_u: return "fibonacci_u";
        case SeqKind::lucas_v: return "lucas_v";
        case SeqKind::fibonacci_u_hat: return "fibonacci_u_hat";
        case SeqKind::lucas_v_hat: return "lucas_v_hat";
    }
    return "?";
}

/// The special sequence of the given kind sharing base's (a, b, c). Hatted
/// kinds swap a and b in the recurrence; `general` returns base unchanged.
inline RecurrenceParams derive(const RecurrenceParams& base, SeqKind kind) {
    const auto& [a, b, c, w0, w1] = base;
    switch (kind) {
        case SeqKind::general: return base;
        case SeqKind::fibonacci_u: return {a, b, c, 0, 1};
        case SeqKind::lucas_v: return {a, b, c, 2, b};
        case SeqKind::fibonacci_u_hat: return {b, a, c, 0, 1};
        case SeqKind::lucas_v_hat: return {b, a, c, 2, a};
    }
    return base;
}

/// Classifies by initial values alone; hatted kinds are not recoverable from data.
inline SeqKind kind_of(const RecurrenceParams& p) {
    if (p.w0 == Rational(0) && p.w1 == Rational(1)) return SeqKind::fibonacci_u;
    if (p.w0 == Rational(2) && p.w1 == p.b) return SeqKind::lucas_v;
    return SeqKind::general;
}

/// Recurrence parameters together with the roots α, β of x² - abx - abc
/// and the Binet constants A, B, all in Q(sqrt(Δ²)). Requires Δ² != 0.
class SeqParams {
public:
    explicit SeqParams(RecurrenceParams p)
        : rec_(std::move(p)),
          delta_sq_(checked_delta_sq(rec_)),
          alpha_(rec_.a * rec_.b / Rational(2), Rational(1, 2), delta_sq_),
          beta_(rec_.a * rec_.b / Rational(2), Rational(-1, 2), delta_sq_),
          A_(QuadExt::rational(0, delta_sq_)),
          B_(QuadExt::rational(0, delta_sq_)) {
        QuadExt diff = alpha_ - beta_;
        A_ = (QuadExt::rational(rec_.w1, delta_sq_) - beta_ * (rec_.w0 / rec_.a)) / diff;
        B_ = (QuadExt::rational(rec_.w1, delta_sq_) - alpha_ * (rec_.w0 / rec_.a)) / diff;
    }

    const RecurrenceParams& recurrence() const { return rec_; }
    const Rational& a() const { return rec_.a; }
    const Rational& b() const { return rec_.b; }
    const Rational& c() const { return rec_.c; }
    const Rational& delta_sq() const { return delta_sq_; }
    const QuadExt& alpha() const { return alpha_; }
    const QuadExt& beta() const { return beta_; }
    /// α - β = sqrt(Δ²) as a formal element.
    QuadExt delta() const { return QuadExt::sqrt_of(delta_sq_); }
    const QuadExt& A() const { return A_; }
    const QuadExt& B() const { return B_; }

    QuadExt lift(const Rational& x) const { return QuadExt::rational(x, delta_sq_); }

private:
    static Rational checked_delta_sq(const RecurrenceParams& p) {
        if (p.a.is_zero() || p.b.is_zero() || p.c.is_zero())
            throw invalid_parameters("a, b and c must be nonzero");
        Rational d = p.delta_sq();
        if (d.is_zero())
            throw invalid_parameters("a^2 b^2 + 4abc = 0 for " + p.str() + ": α = β, no Binet form");
        return d;
    }

    RecurrenceParams rec_;
    Rational delta_sq_;
    QuadExt alpha_;
    QuadExt beta_;
    QuadExt A_;
    QuadExt B_;
};

/// Direct evaluation without memoization: forward recurrence for n >= 0,
/// w_{n-2} = (w_n - χ(n) w_{n-1}) / c for n < 0.
inline Rational term_recurrence_uncached(const RecurrenceParams& p, long n) {
    if (n >= 0) {
        Rational prev = p.w0, cur = p.w1;
        if (n == 0) return prev;
        for (long k = 2; k <= n; ++k) {
            Rational next = p.chi(k) * cur + p.c * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    // walking down: (w_k, w_{k+1}) -> (w_{k-1}, w_k)
    Rational lo = p.w0, hi = p.w1;
    for (long k = 0; k > n; --k) {
        Rational below = (hi - p.chi(k + 1) * lo) / p.c;
        hi = std::move(lo);
        lo = std::move(below);
    }
    return lo;
}

/// w_n of a bi-periodic Horadam sequence, memoized in both index directions.
/// Copies share one cache; access is serialized by a mutex.
class Sequence {
public:
    explicit Sequence(RecurrenceParams p) : params_(std::move(p)), cache_(std::make_shared<Cache>()) {
        if (params_.c.is_zero()) throw invalid_parameters("c must be nonzero");
        cache_->forward = {params_.w0, params_.w1};
    }

    const RecurrenceParams& params() const { return params_; }

    Rational term(long n) const {
        std::lock_guard lock(cache_->mutex);
        if (n >= 0) {
            auto& f = cache_->forward;
            while (static_cast<long>(f.size()) <= n) {
                long k = static_cast<long>(f.size());
                f.push_back(params_.chi(k) * f[k - 1] + params_.c * f[k - 2]);
            }
            return f[static_cast<std::size_t>(n)];
        }
        // backward[j] holds w_{-(j+1)}
        auto& bk = cache_->backward;
        const auto& f = cache_->forward;
        while (static_cast<long>(bk.size()) < -n) {
            long k = -static_cast<long>(bk.size()) - 1;  // index being produced
            const Rational& w1 = k + 1 >= 0 ? f[static_cast<std::size_t>(k + 1)] : bk[static_cast<std::size_t>(-(k + 1) - 1)];
            const Rational& w2 = k + 2 >= 0 ? f[static_cast<std::size_t>(k + 2)] : bk[static_cast<std::size_t>(-(k + 2) - 1)];
            bk.push_back((w2 - params_.chi(k + 2) * w1) / params_.c);
        }
        return bk[static_cast<std::size_t>(-n - 1)];
    }

    Rational operator()(long n) const { return term(n); }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<Rational> forward;
        std::vector<Rational> backward;
    };

    RecurrenceParams params_;
    std::shared_ptr<Cache> cache_;
};

inline Rational term_recurrence(const RecurrenceParams& p, long n) { return Sequence(p).term(n); }

/// w_{-n} for n >= 1 from (-c)^n w_{-n} = (b/a)^{ξ(n)} w0 u_{n+1} - w1 u_n,
/// with u the (0,1) sequence of the same (a, b, c).
inline Rational term_negative_closed_form(const RecurrenceParams& p, long n) {
    if (n < 1) throw std::invalid_argument("term_negative_closed_form: n must be >= 1");
    Sequence u(derive(p, SeqKind::fibonacci_u));
    Rational rhs = pow(p.b / p.a, parity(n)) * p.w0 * u(n + 1) - p.w1 * u(n);
    return rhs / pow(-p.c, n);
}

/// a^{ξ(n+1)} / (ab)^{floor(n/2)}, the Binet prefactor.
inline Rational binet_prefactor(const Rational& a, const Rational& b, long n) {
    return pow(a, parity(n + 1)) / pow(a * b, floor_half(n));
}

/// w_n = a^{ξ(n+1)}/(ab)^{floor(n/2)} (A α^n - B β^n), n >= 0.
inline QuadExt term_binet(const SeqParams& p, long n) {
    if (n < 0) throw std::invalid_argument("term_binet: n must be >= 0");
    QuadExt inner = p.A() * quad_pow(p.alpha(), n) - p.B() * quad_pow(p.beta(), n);
    return inner * binet_prefactor(p.a(), p.b(), n);
}

/// Right-hand side of root^m = a^{-1} a^{(m+ξ)/2} b^{(m-ξ)/2} root u_m + c a^{(m-ξ)/2} b^{(m+ξ)/2} u_{m-1}.
inline QuadExt root_power_expansion(const SeqParams& p, const QuadExt& root, const Sequence& u, long m) {
    long x = parity(m);
    long hi = (m + x) / 2, lo = (m - x) / 2;
    Rational coef_root = pow(p.a(), hi - 1) * pow(p.b(), lo) * u(m);
    Rational constant = p.c() * pow(p.a(), lo) * pow(p.b(), hi) * u(m - 1);
    return root * coef_root + constant;
}

/// α^m and β^m (repeated squaring) against their u-expansions; m >= 1.
inline bool root_power_expansion_check(const SeqParams& p, long m) {
    if (m < 1) throw std::invalid_argument("root_power_expansion_check: m must be >= 1");
    Sequence u(derive(p.recurrence(), SeqKind::fibonacci_u));
    return quad_pow(p.alpha(), m) == root_power_expansion(p, p.alpha(), u, m) &&
           quad_pow(p.beta(), m) == root_power_expansion(p, p.beta(), u, m);
}

/// u_n = a^{ξ(n+1)}/(ab)^{floor(n/2)} (α^n - β^n)/(α - β).
inline QuadExt u_closed_form(const SeqParams& p, long n) {
    QuadExt diff = quad_pow(p.alpha(), n) - quad_pow(p.beta(), n);
    return diff / p.delta() * binet_prefactor(p.a(), p.b(), n);
}

/// v_n = a^{-ξ(n)}/(ab)^{floor(n/2)} (α^n + β^n).
inline QuadExt v_closed_form(const SeqParams& p, long n) {
    QuadExt sum = quad_pow(p.alpha(), n) + quad_pow(p.beta(), n);
    return sum * (pow(p.a(), -parity(n)) / pow(p.a() * p.b(), floor_half(n)));
}

/// Recurrence values of u (0,1) and v (2,b) against their closed forms at n >= 0.
inline bool u_v_relation_check(const SeqParams& p_u, const SeqParams& p_v, long n) {
    const auto& ru = p_u.recurrence();
    const auto& rv = p_v.recurrence();
    if (ru.a != rv.a || ru.b != rv.b || ru.c != rv.c)
        throw invalid_parameters("u and v sequences must share (a, b, c)");
    if (kind_of(ru) != SeqKind::fibonacci_u || kind_of(rv) != SeqKind::lucas_v)
        throw invalid_parameters("expected initial values (0,1) for u and (2,b) for v");
    return u_closed_form(p_u, n) == p_u.lift(term_recurrence(ru, n)) &&
           v_closed_form(p_v, n) == p_v.lift(term_recurrence(rv, n));
}

}  // namespace hybridseq
