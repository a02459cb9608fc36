#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hybridseq/hybrid.hpp"
#include "hybridseq/hybrid_sequence.hpp"
#include "hybridseq/sequence.hpp"

namespace hybridseq {

enum class Branch { even, odd };

constexpr Branch branch_of(long n) { return parity(n) == 0 ? Branch::even : Branch::odd; }
constexpr Branch other(Branch b) { return b == Branch::even ? Branch::odd : Branch::even; }

/// η, η̂, θ, θ̂, μ_e, μ_o, γ_e, γ_o of the root-hybrid product lemmas.
struct LemmaConstants {
    RationalHybrid eta;
    RationalHybrid eta_hat;
    Rational theta;
    Rational theta_hat;
    Rational mu_e;
    Rational mu_o;
    Rational gamma_e;
    Rational gamma_o;

    static LemmaConstants make(const RecurrenceParams& p) {
        const auto& [a, b, c, w0_, w1_] = p;
        Sequence u(derive(p, SeqKind::fibonacci_u));
        Rational one(1), two(2), half(1, 2);
        Rational ab = a * b;
        Rational ba = b / a;
        Rational gamma_e = half * (ba * u(6) + two * u(3) - ba * u(2));
        Rational gamma_o = half * (u(6) + two * u(3) - u(2));
        return {
            {0, one - b, a - b - c, one + ab + c},
            {0, one - a, b - a - c, one + ab + c},
            one - b * c / a + b * c + b * c * c * c / a,
            one - a * c / b + a * c + a * c * c * c / b,
            -one + ba * c * (u(5) + two * u(2) - u(1)) + b * gamma_e,
            -one + (a / b) * c * (u(5) + two * ba * u(2) - u(1)) + a * gamma_o,
            gamma_e,
            gamma_o,
        };
    }
};

/// Everything the checkers share for one parameter tuple: the sequence w,
/// the special sequences u, v and their hatted versions over the same
/// (a, b, c), the roots, the root hybrids and the lemma constants.
class IdentityContext {
public:
    explicit IdentityContext(HybridSeq w)
        : w_(std::move(w)),
          u_(derive(w_.params(), SeqKind::fibonacci_u), SeqKind::fibonacci_u),
          v_(derive(w_.params(), SeqKind::lucas_v), SeqKind::lucas_v),
          u_hat_(derive(w_.params(), SeqKind::fibonacci_u_hat), SeqKind::fibonacci_u_hat),
          v_hat_(derive(w_.params(), SeqKind::lucas_v_hat), SeqKind::lucas_v_hat),
          params_(w_.params()),
          roots_(root_hybrids(params_)),
          constants_(LemmaConstants::make(w_.params())),
          ab_(params_.A() * params_.B()) {}

    explicit IdentityContext(const RecurrenceParams& p) : IdentityContext(HybridSeq(p, kind_of(p))) {}

    const HybridSeq& w() const { return w_; }
    const HybridSeq& u() const { return u_; }
    const HybridSeq& v() const { return v_; }
    const HybridSeq& u_hat() const { return u_hat_; }
    const HybridSeq& v_hat() const { return v_hat_; }
    const SeqParams& params() const { return params_; }
    const RecurrenceParams& recurrence() const { return w_.params(); }
    const RootHybrid& roots() const { return roots_; }
    const LemmaConstants& constants() const { return constants_; }

    const Rational& a() const { return params_.a(); }
    const Rational& b() const { return params_.b(); }
    const Rational& c() const { return params_.c(); }
    const Rational& delta_sq() const { return params_.delta_sq(); }
    QuadExt delta() const { return params_.delta(); }

    /// A*B in Q(sqrt Δ²); symmetric in α, β so its rad part should vanish.
    const QuadExt& ab_quad() const { return ab_; }
    const Rational& ab() const { return ab_.rat(); }

    // Lemma building blocks, selected by branch: even uses K_{v,0}, K_{u,0},
    // θ, η and divisor a; odd uses the hatted sequences, θ̂, η̂ and divisor b.
    RationalHybrid v0_minus_theta(Branch br) const {
        return br == Branch::even ? v_(0) - real_hybrid(constants_.theta) : v_hat_(0) - real_hybrid(constants_.theta_hat);
    }
    RationalHybrid u0_minus_eta(Branch br) const {
        return br == Branch::even ? u_(0) - constants_.eta : u_hat_(0) - constants_.eta_hat;
    }
    RationalHybrid v0_plus_mu(Branch br) const {
        return br == Branch::even ? v_(0) + real_hybrid(constants_.mu_e) : v_hat_(0) + real_hybrid(constants_.mu_o);
    }
    RationalHybrid u0_plus_gamma(Branch br) const {
        return br == Branch::even ? u_(0) + real_hybrid(constants_.gamma_e) : u_hat_(0) + real_hybrid(constants_.gamma_o);
    }
    const Rational& lemma_divisor(Branch br) const { return br == Branch::even ? a() : b(); }

    QuadHybrid lift(const RationalHybrid& k) const { return hybridseq::lift(k, delta_sq()); }

private:
    HybridSeq w_;
    HybridSeq u_;
    HybridSeq v_;
    HybridSeq u_hat_;
    HybridSeq v_hat_;
    SeqParams params_;
    RootHybrid roots_;
    LemmaConstants constants_;
    QuadExt ab_;
};

struct Residual {
    std::string label;
    QuadHybrid value;  // lhs - rhs
};

/// Outcome of one identity instance; passed iff there is no error and every
/// residual is zero in all rat and rad parts.
struct IdentityReport {
    std::string identity;
    RecurrenceParams params;
    std::vector<long> indices;
    bool passed = false;
    std::vector<Residual> residuals;
    std::string error;
    bool expected_error = false;
    bool skipped = false;
};

namespace detail {

class ReportBuilder {
public:
    ReportBuilder(const IdentityContext& ctx, std::string name, std::vector<long> indices)
        : ctx_(ctx) {
        report_.identity = std::move(name);
        report_.params = ctx.recurrence();
        report_.indices = std::move(indices);
    }

    void add(std::string label, const QuadHybrid& lhs, const QuadHybrid& rhs) {
        report_.residuals.push_back({std::move(label), lhs - rhs});
    }
    void add(std::string label, const RationalHybrid& lhs, const RationalHybrid& rhs) {
        add(std::move(label), ctx_.lift(lhs), ctx_.lift(rhs));
    }
    void add(std::string label, const QuadExt& lhs, const QuadExt& rhs) {
        QuadExt z = ctx_.params().lift(0);
        report_.residuals.push_back({std::move(label), QuadHybrid{lhs - rhs, z, z, z}});
    }
    void add(std::string label, const Rational& lhs, const Rational& rhs) {
        add(std::move(label), ctx_.params().lift(lhs), ctx_.params().lift(rhs));
    }
    /// Requires q to lie in Q: residual is its rad part.
    void add_rational_check(std::string label, const QuadExt& q) {
        add(std::move(label), QuadExt(0, q.rad(), q.radicand()), ctx_.params().lift(0));
    }

    IdentityReport finish() {
        report_.passed = true;
        for (const auto& r : report_.residuals)
            if (!r.value.is_zero()) report_.passed = false;
        return std::move(report_);
    }

private:
    const IdentityContext& ctx_;
    IdentityReport report_;
};

struct Matrix2 {
    RationalHybrid m00, m01, m10, m11;
};

struct RationalMatrix2 {
    Rational m00, m01, m10, m11;

    friend RationalMatrix2 operator*(const RationalMatrix2& x, const RationalMatrix2& y) {
        return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
                x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
    }
};

inline RationalMatrix2 matrix_pow(const RationalMatrix2& m, long e) {
    RationalMatrix2 result{1, 0, 0, 1};
    RationalMatrix2 base = m;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Hybrid matrix times rational matrix; scalars commute with hybrids so the
/// entry products are unambiguous.
inline Matrix2 operator*(const Matrix2& x, const RationalMatrix2& y) {
    return {y.m00 * x.m00 + y.m10 * x.m01, y.m01 * x.m00 + y.m11 * x.m01,
            y.m00 * x.m10 + y.m10 * x.m11, y.m01 * x.m10 + y.m11 * x.m11};
}

inline Matrix2 operator*(const RationalMatrix2& y, const Matrix2& x) {
    return {y.m00 * x.m00 + y.m01 * x.m10, y.m00 * x.m01 + y.m01 * x.m11,
            y.m10 * x.m00 + y.m11 * x.m10, y.m10 * x.m01 + y.m11 * x.m11};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed-form right-hand sides, per branch. Checkers pick the branch from the
// index parity; the branch is a parameter so tests can evaluate the other one.

/// (-c)^n AB Δ² u_{2r} ((K_{v,0} - θ) u_{2s} - c (K_{u,0} - η) v_{2s}); the odd
/// branch uses hatted terms and an extra (b/a) on the u_{2s} term.
inline RationalHybrid vajda_rhs(const IdentityContext& ctx, long n, long r, long s, Branch br) {
    const auto& u = ctx.u().sequence();
    const auto& v = ctx.v().sequence();
    Rational lead = pow(-ctx.c(), n) * ctx.ab() * ctx.delta_sq() * u(2 * r);
    Rational u_coef = u(2 * s);
    if (br == Branch::odd) u_coef *= ctx.b() / ctx.a();
    return lead * (u_coef * ctx.v0_minus_theta(br) - (ctx.c() * v(2 * s)) * ctx.u0_minus_eta(br));
}

/// (-1)^{n+1} c^{n-2r} AB Δ² u_{2r} ((K_{v,0} - θ) u_{2r} + c (K_{u,0} - η) v_{2r}).
inline RationalHybrid catalan_rhs(const IdentityContext& ctx, long n, long r, Branch br) {
    const auto& u = ctx.u().sequence();
    const auto& v = ctx.v().sequence();
    Rational sign = parity(n + 1) == 0 ? Rational(1) : Rational(-1);
    Rational lead = sign * pow(ctx.c(), n - 2 * r) * ctx.ab() * ctx.delta_sq() * u(2 * r);
    Rational u_coef = u(2 * r);
    if (br == Branch::odd) u_coef *= ctx.b() / ctx.a();
    return lead * (u_coef * ctx.v0_minus_theta(br) + (ctx.c() * v(2 * r)) * ctx.u0_minus_eta(br));
}

/// (-1)^{n+1} a c^{n-2} AB Δ² ((K_{v,0} - θ) x + c (ab + 2c)(K_{u,0} - η)), x = a even, b odd.
inline RationalHybrid cassini_rhs(const IdentityContext& ctx, long n, Branch br) {
    Rational sign = parity(n + 1) == 0 ? Rational(1) : Rational(-1);
    Rational lead = sign * ctx.a() * pow(ctx.c(), n - 2) * ctx.ab() * ctx.delta_sq();
    const Rational& x = br == Branch::even ? ctx.a() : ctx.b();
    Rational twist = ctx.c() * (ctx.a() * ctx.b() + Rational(2) * ctx.c());
    return lead * (x * ctx.v0_minus_theta(br) + twist * ctx.u0_minus_eta(br));
}

/// K_{u,n} K_{v,m} - K_{u,m} K_{v,n} = 2 (-c)^m u_{n-m} (K_{v,0} - θ), or for odd n
/// 2 (a/b)^{-ξ(m)} (-c)^m u_{n-m} (K_{v̂,0} - θ̂).
inline RationalHybrid fib_lucas_iii_rhs(const IdentityContext& ctx, long n, long m, Branch br) {
    Rational coef = Rational(2) * pow(-ctx.c(), m) * ctx.u().sequence()(n - m);
    if (br == Branch::odd) coef *= pow(ctx.a() / ctx.b(), -parity(m));
    return coef * ctx.v0_minus_theta(br);
}

/// K_{v,n}² - K_{u,n}² in terms of the lemma constants, as stated per branch.
inline RationalHybrid fib_lucas_iv_rhs(const IdentityContext& ctx, long n, Branch br) {
    const Rational& a = ctx.a();
    const Rational& b = ctx.b();
    const Rational& d2 = ctx.delta_sq();
    Rational a2 = a * a;
    Rational minus_over_d2 = (d2 - a2) / d2;
    Rational minus_over_a2 = (d2 - a2) / a2;
    Rational plus_over_d2 = (d2 + a2) / d2;
    Rational v2n = ctx.v().sequence()(2 * n);
    Rational u2n = ctx.u().sequence()(2 * n);
    Rational cn = pow(-ctx.c(), n);
    if (br == Branch::even) {
        return (minus_over_d2 * v2n) * ctx.v0_plus_mu(br) + (minus_over_a2 * u2n) * ctx.u0_plus_gamma(br) +
               (Rational(2) * cn * plus_over_d2) * ctx.v0_minus_theta(br);
    }
    return (minus_over_d2 * b * v2n / a) * ctx.v0_plus_mu(br) + (minus_over_a2 * u2n) * ctx.u0_plus_gamma(br) +
           (Rational(2) * b / a * cn * plus_over_d2) * ctx.v0_minus_theta(br);
}

/// α_ξβ_ξ (sign = +1) or β_ξα_ξ (sign = -1): K_{v,0} - θ ± (Δ/a) c (K_{u,0} - η).
inline QuadHybrid lemma_product_rhs(const IdentityContext& ctx, Branch br, int sign) {
    QuadExt twist = ctx.delta() * (ctx.c() / ctx.lemma_divisor(br));
    if (sign < 0) twist = -twist;
    return ctx.lift(ctx.v0_minus_theta(br)) + twist * ctx.lift(ctx.u0_minus_eta(br));
}

/// α_ξ² (sign = +1) or β_ξ² (sign = -1): K_{v,0} + μ ± (Δ/a)(K_{u,0} + γ).
inline QuadHybrid lemma_square_rhs(const IdentityContext& ctx, Branch br, int sign) {
    QuadExt twist = ctx.delta() / ctx.params().lift(ctx.lemma_divisor(br));
    if (sign < 0) twist = -twist;
    return ctx.lift(ctx.v0_plus_mu(br)) + twist * ctx.lift(ctx.u0_plus_gamma(br));
}

/// The family name when p equals a parameter-free named row.
inline std::optional<std::string> matching_family(const RecurrenceParams& p) {
    for (const auto& f : named_families())
        if (f.free_params.empty() && f.instantiate({}) == p) return f.name;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Checkers

/// Scalar Binet form against the recurrence; the Binet value must be rational.
inline IdentityReport check_binet(const IdentityContext& ctx, long n) {
    detail::ReportBuilder rb(ctx, "binet", {n});
    QuadExt binet = term_binet(ctx.params(), n);
    rb.add(("w_" + std::to_string(n)), binet, ctx.params().lift(ctx.w().sequence()(n)));
    return rb.finish();
}

/// Backward recurrence against the negative-index closed form, n >= 1.
inline IdentityReport check_negative_index(const IdentityContext& ctx, long n) {
    detail::ReportBuilder rb(ctx, "negative_index", {n});
    rb.add("w_-" + std::to_string(n), ctx.w().sequence()(-n), term_negative_closed_form(ctx.recurrence(), n));
    return rb.finish();
}

/// α^m and β^m against their u-expansions.
inline IdentityReport check_root_powers(const IdentityContext& ctx, long m) {
    detail::ReportBuilder rb(ctx, "root_power", {m});
    const auto& p = ctx.params();
    rb.add("alpha^m", quad_pow(p.alpha(), m), root_power_expansion(p, p.alpha(), ctx.u().sequence(), m));
    rb.add("beta^m", quad_pow(p.beta(), m), root_power_expansion(p, p.beta(), ctx.u().sequence(), m));
    return rb.finish();
}

/// u, v closed forms, and the hatted sequences as parity rescalings of u, v.
inline IdentityReport check_u_v_relation(const IdentityContext& ctx, long n) {
    detail::ReportBuilder rb(ctx, "u_v_relation", {n});
    const auto& p = ctx.params();
    const auto& u = ctx.u().sequence();
    const auto& v = ctx.v().sequence();
    rb.add("u_n closed form", u_closed_form(p, n), p.lift(u(n)));
    rb.add("v_n closed form", v_closed_form(p, n), p.lift(v(n)));
    rb.add("u_hat_n", ctx.u_hat().sequence()(n), pow(ctx.b() / ctx.a(), parity(n + 1)) * u(n));
    rb.add("v_hat_n", ctx.v_hat().sequence()(n), pow(ctx.a() / ctx.b(), parity(n)) * v(n));
    return rb.finish();
}

/// Hybrid Binet form against the definition, componentwise.
inline IdentityReport check_hybrid_binet(const IdentityContext& ctx, long n) {
    detail::ReportBuilder rb(ctx, "hybrid_binet", {n});
    rb.add("K_n", hybrid_term_binet(ctx.params(), ctx.roots(), n), ctx.lift(ctx.w()(n)));
    return rb.finish();
}

/// K_n = (ab + 2c) K_{n-2} - c² K_{n-4}.
inline IdentityReport check_four_term_recurrence(const IdentityContext& ctx, long n) {
    detail::ReportBuilder rb(ctx, "four_term_recurrence", {n});
    const auto& K = ctx.w();
    Rational s = ctx.a() * ctx.b() + Rational(2) * ctx.c();
    rb.add("K_n", K(n), s * K(n - 2) - (ctx.c() * ctx.c()) * K(n - 4));
    return rb.finish();
}

/// Character: K conj(K) has vanishing imaginary parts and matches the closed form.
inline IdentityReport check_character(const IdentityContext& ctx, long n) {
    detail::ReportBuilder rb(ctx, "character", {n});
    RationalHybrid k = ctx.w()(n);
    const auto& w = ctx.w().sequence();
    Rational w2 = w(n + 2);
    Rational diff = w(n + 1) - w2;
    Rational closed = w(n) * w(n) + diff * diff - w2 * w2 - w(n + 3) * w(n + 3);
    rb.add("K conj(K)", character_product(k), real_hybrid(closed));
    return rb.finish();
}

/// (1 - (ab+2c)x² + c²x⁴) Σ_{n<=degree} K_n x^n equals the stated numerator
/// coefficientwise through x^degree.
inline IdentityReport check_generating_function(const IdentityContext& ctx, long degree) {
    if (degree < 4) throw std::invalid_argument("check_generating_function: degree must be >= 4");
    detail::ReportBuilder rb(ctx, "generating_function", {degree});
    const Rational& a = ctx.a();
    const Rational& b = ctx.b();
    const Rational& c = ctx.c();
    Rational ab = a * b;
    std::vector<Rational> den = {1, 0, -(ab + Rational(2) * c), 0, c * c};

    const auto& K = ctx.w();
    std::vector<RationalHybrid> series;
    series.reserve(static_cast<std::size_t>(degree + 1));
    for (long n = 0; n <= degree; ++n) series.push_back(K(n));

    RationalHybrid k0 = series[0], k1 = series[1];
    RationalHybrid zero = real_hybrid(0);
    // (1 - (ab+c)x² + bcx³) K_0 + x(1 + ax - cx²) K_1
    std::vector<RationalHybrid> numerator = {
        k0, k1, a * k1 - (ab + c) * k0, (b * c) * k0 - c * k1,
    };

    bool all_zero = true;
    for (long k = 0; k <= degree; ++k) {
        RationalHybrid coef = zero;
        for (long j = 0; j < static_cast<long>(den.size()) && j <= k; ++j)
            if (!den[static_cast<std::size_t>(j)].is_zero())
                coef += den[static_cast<std::size_t>(j)] * series[static_cast<std::size_t>(k - j)];
        const RationalHybrid& want = k < 4 ? numerator[static_cast<std::size_t>(k)] : zero;
        if (!(coef == want)) {
            all_zero = false;
            rb.add("x^" + std::to_string(k), coef, want);
        }
    }
    if (all_zero) rb.add("x^0..x^" + std::to_string(degree), zero, zero);
    return rb.finish();
}

/// α_ξβ_ξ, β_ξα_ξ against their closed forms, plus the sum/difference forms:
/// the sum equals 2(K_{v,0} - θ) with zero rad part, the difference has zero rat part.
inline IdentityReport check_lemma_products(const IdentityContext& ctx, int xi) {
    detail::ReportBuilder rb(ctx, "lemma_products", {xi});
    Branch br = xi == 0 ? Branch::even : Branch::odd;
    const QuadHybrid& al = ctx.roots().alpha_xi(xi);
    const QuadHybrid& be = ctx.roots().beta_xi(xi);
    QuadHybrid ab = al * be;
    QuadHybrid ba = be * al;
    rb.add("alpha_xi beta_xi", ab, lemma_product_rhs(ctx, br, +1));
    rb.add("beta_xi alpha_xi", ba, lemma_product_rhs(ctx, br, -1));

    QuadHybrid sum = ab + ba;
    QuadHybrid diff = ab - ba;
    rb.add("sum", sum, ctx.lift(Rational(2) * ctx.v0_minus_theta(br)));
    QuadExt twist = ctx.delta() * (Rational(2) * ctx.c() / ctx.lemma_divisor(br));
    rb.add("difference", diff, twist * ctx.lift(ctx.u0_minus_eta(br)));
    for (const auto* comp : {&sum.re, &sum.i, &sum.eps, &sum.h}) rb.add_rational_check("sum rad part", *comp);
    for (const auto* comp : {&diff.re, &diff.i, &diff.eps, &diff.h})
        rb.add("difference rat part", ctx.params().lift(comp->rat()), ctx.params().lift(0));
    return rb.finish();
}

/// α_ξ², β_ξ² against their closed forms and against 2 root_ξ - C(root_ξ).
inline IdentityReport check_lemma_squares(const IdentityContext& ctx, int xi) {
    detail::ReportBuilder rb(ctx, "lemma_squares", {xi});
    Branch br = xi == 0 ? Branch::even : Branch::odd;
    const QuadHybrid& al = ctx.roots().alpha_xi(xi);
    const QuadHybrid& be = ctx.roots().beta_xi(xi);
    QuadHybrid al2 = al * al;
    QuadHybrid be2 = be * be;
    rb.add("alpha_xi^2", al2, lemma_square_rhs(ctx, br, +1));
    rb.add("beta_xi^2", be2, lemma_square_rhs(ctx, br, -1));

    auto via_character = [&](const QuadHybrid& k) {
        QuadExt z = ctx.params().lift(0);
        return Rational(2) * k - QuadHybrid{hybrid_character(k), z, z, z};
    };
    rb.add("alpha_xi^2 = 2 alpha_xi - C(alpha_xi)", al2, via_character(al));
    rb.add("beta_xi^2 = 2 beta_xi - C(beta_xi)", be2, via_character(be));
    rb.add("beta_xi^2 = conj_sqrt(alpha_xi^2)", be2, radical_conjugate(al2));
    return rb.finish();
}

/// K_{n+2r} K_{n+2s} - K_n K_{n+2(r+s)} against the parity-selected closed form.
inline IdentityReport check_vajda(const IdentityContext& ctx, long n, long r, long s) {
    detail::ReportBuilder rb(ctx, "vajda", {n, r, s});
    const auto& K = ctx.w();
    rb.add_rational_check("AB rad part", ctx.ab_quad());
    RationalHybrid lhs = K(n + 2 * r) * K(n + 2 * s) - K(n) * K(n + 2 * (r + s));
    rb.add("vajda", lhs, vajda_rhs(ctx, n, r, s, branch_of(n)));
    return rb.finish();
}

/// K_{n+2r} K_{n-2r} - K_n² against the parity-selected closed form; n - 2r may be negative.
inline IdentityReport check_catalan(const IdentityContext& ctx, long n, long r) {
    detail::ReportBuilder rb(ctx, "catalan", {n, r});
    const auto& K = ctx.w();
    rb.add_rational_check("AB rad part", ctx.ab_quad());
    RationalHybrid kn = K(n);
    RationalHybrid lhs = K(n + 2 * r) * K(n - 2 * r) - kn * kn;
    rb.add("catalan", lhs, catalan_rhs(ctx, n, r, branch_of(n)));
    return rb.finish();
}

/// Cassini at indices 2n and 2n+1 (closed form and via Catalan r = 1), the
/// matrix identity [[K_{2n+2}, K_{2n}], [K_{2n}, K_{2n-2}]] =
/// [[ab+2c, -c²], [1, 0]]^{n-1} [[K_4, K_2], [K_2, K_0]], and both ordered
/// determinant identities. n >= 1.
///
/// The rational power multiplies from the left. Placed on the right, the
/// (0,1) entry becomes -c² K_4 at n = 2 and the equality fails.
inline IdentityReport check_cassini_and_matrix(const IdentityContext& ctx, long n) {
    if (n < 1) throw std::invalid_argument("check_cassini_and_matrix: n must be >= 1");
    detail::ReportBuilder rb(ctx, "cassini_matrix", {n});
    const auto& K = ctx.w();
    for (long idx : {2 * n, 2 * n + 1}) {
        RationalHybrid k = K(idx);
        RationalHybrid lhs = K(idx + 2) * K(idx - 2) - k * k;
        std::string tag = "cassini[" + std::to_string(idx) + "]";
        rb.add(tag, lhs, cassini_rhs(ctx, idx, branch_of(idx)));
        rb.add(tag + " via catalan", lhs, catalan_rhs(ctx, idx, 1, branch_of(idx)));
    }

    RationalHybrid k0 = K(0), k2 = K(2), k4 = K(4);
    RationalHybrid k2n = K(2 * n), k2n_p = K(2 * n + 2), k2n_m = K(2 * n - 2);
    const Rational& c = ctx.c();
    detail::RationalMatrix2 step{ctx.a() * ctx.b() + Rational(2) * c, -(c * c), 1, 0};
    detail::Matrix2 rhs = detail::matrix_pow(step, n - 1) * detail::Matrix2{k4, k2, k2, k0};
    rb.add("matrix[0][0]", k2n_p, rhs.m00);
    rb.add("matrix[0][1]", k2n, rhs.m01);
    rb.add("matrix[1][0]", k2n, rhs.m10);
    rb.add("matrix[1][1]", k2n_m, rhs.m11);

    Rational scale = pow(c, 2 * n - 2);
    rb.add("det top-down", k2n_p * k2n_m - k2n * k2n, scale * (k4 * k0 - k2 * k2));
    rb.add("det bottom-up", k2n_m * k2n_p - k2n * k2n, scale * (k0 * k4 - k2 * k2));
    return rb.finish();
}

/// Σ_{r=1}^n K_r against the closed form using K_{-1}. Throws
/// summation_denominator_zero when c² - ab - 2c + 1 = 0.
inline IdentityReport check_summation(const IdentityContext& ctx, long n) {
    if (n < 1) throw std::invalid_argument("check_summation: n must be >= 1");
    const Rational& a = ctx.a();
    const Rational& b = ctx.b();
    const Rational& c = ctx.c();
    Rational den = c * c - a * b - Rational(2) * c + Rational(1);
    if (den.is_zero()) {
        auto fam = matching_family(ctx.recurrence());
        throw summation_denominator_zero("summation denominator zero: c^2 - ab - 2c + 1 = 0 for " +
                                         ctx.recurrence().str() + (fam ? " [" + *fam + "]" : std::string()));
    }
    detail::ReportBuilder rb(ctx, "summation", {n});
    const auto& K = ctx.w();
    RationalHybrid sum = K(1);
    for (long r = 2; r <= n; ++r) sum += K(r);
    RationalHybrid num = (c * c) * (K(n) + K(n - 1) - K(0) - K(-1)) - K(n + 2) - K(n + 1) + K(2) + K(1);
    rb.add("sum", sum, den.inverse() * num);
    return rb.finish();
}

/// Raised when a half-integer exponent appears in the binomial sums; the
/// parity argument says it never should.
class exponent_not_integral : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// (ab)^{k/2} (a/b)^{(ξ(k+r) - ξ(r))/2} = a^{(k + ξ(k+r) - ξ(r))/2} b^{(k - ξ(k+r) + ξ(r))/2}.
inline Rational binomial_scale(const Rational& a, const Rational& b, long k, long r) {
    long shift = parity(k + r) - parity(r);
    long ea = k + shift, eb = k - shift;
    if (parity(ea) != 0 || parity(eb) != 0)
        throw exponent_not_integral("non-integral exponent at k=" + std::to_string(k) + ", r=" + std::to_string(r));
    return pow(a, ea / 2) * pow(b, eb / 2);
}

/// (i) Σ C(n,i) (-c)^{n-i} K_{2i+r} = (ab)^{n/2} (a/b)^{(ξ(n+r)-ξ(r))/2} K_{n+r}
/// (ii) Σ C(n,i) c^{n-i} (ab)^{i/2} (a/b)^{(ξ(i+r)-ξ(r))/2} K_{i+r} = K_{2n+r}
inline IdentityReport check_binomial_sums(const IdentityContext& ctx, long n, long r) {
    detail::ReportBuilder rb(ctx, "binomial_sums", {n, r});
    const auto& K = ctx.w();
    const Rational& c = ctx.c();
    RationalHybrid first = real_hybrid(0), second = real_hybrid(0);
    for (long i = 0; i <= n; ++i) {
        Rational bin = binomial(n, i);
        first += (bin * pow(-c, n - i)) * K(2 * i + r);
        second += (bin * pow(c, n - i) * binomial_scale(ctx.a(), ctx.b(), i, r)) * K(i + r);
    }
    rb.add("(i)", first, binomial_scale(ctx.a(), ctx.b(), n, r) * K(n + r));
    rb.add("(ii)", second, K(2 * n + r));
    return rb.finish();
}

/// The four relations between K_{u,n} and K_{v,n}; (iii) only when n > m.
inline IdentityReport check_fib_lucas_relations(const IdentityContext& ctx, long n, long m) {
    if (n < 1) throw std::invalid_argument("check_fib_lucas_relations: n must be >= 1");
    detail::ReportBuilder rb(ctx, "fib_lucas_relations", {n, m});
    const auto& Ku = ctx.u();
    const auto& Kv = ctx.v();
    const Rational& c = ctx.c();
    Rational ratio = pow(ctx.a() / ctx.b(), parity(n));
    rb.add("(i)", Ku(n + 1) + c * Ku(n - 1), ratio * Kv(n));
    rb.add("(ii)", Kv(n + 1) + c * Kv(n - 1), (ratio * ctx.delta_sq()) * Ku(n));
    if (n > m) rb.add("(iii)", Ku(n) * Kv(m) - Ku(m) * Kv(n), fib_lucas_iii_rhs(ctx, n, m, branch_of(n)));
    RationalHybrid kv = Kv(n), ku = Ku(n);
    rb.add("(iv)", kv * kv - ku * ku, fib_lucas_iv_rhs(ctx, n, branch_of(n)));
    return rb.finish();
}

}  // namespace hybridseq
