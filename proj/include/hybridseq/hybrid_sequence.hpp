#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybridseq/hybrid.hpp"
#include "hybridseq/sequence.hpp"

namespace hybridseq {

/// K_{w,n} = w_n + w_{n+1} i + w_{n+2} ε + w_{n+3} h over a bi-periodic
/// Horadam sequence. Any integer n; negative indices come from the
/// backward recurrence.
class HybridSeq {
public:
    explicit HybridSeq(RecurrenceParams p, SeqKind kind = SeqKind::general) : seq_(std::move(p)), kind_(kind) {}

    const RecurrenceParams& params() const { return seq_.params(); }
    const Sequence& sequence() const { return seq_; }
    SeqKind kind() const { return kind_; }

    RationalHybrid term(long n) const { return {seq_(n), seq_(n + 1), seq_(n + 2), seq_(n + 3)}; }
    RationalHybrid operator()(long n) const { return term(n); }

    /// C(K_{w,n}) = w_n² + (w_{n+1} - w_{n+2})² - w_{n+2}² - w_{n+3}². The
    /// product route K * conj(K) is evaluated as well; a disagreement throws.
    Rational character(long n) const {
        RationalHybrid k = term(n);
        Rational closed = character_closed_form(k);
        RationalHybrid prod = character_product(k);
        if (!prod.is_scalar() || prod.re != closed)
            throw std::logic_error("character routes disagree at n=" + std::to_string(n));
        return closed;
    }

private:
    Sequence seq_;
    SeqKind kind_;
};

/// α_ξ, β_ξ for ξ ∈ {0, 1}:
/// root_ξ = 1 + (1/a)(a/b)^ξ root i + (1/(ab)) root² ε + (1/(a²b))(a/b)^ξ root³ h.
struct RootHybrid {
    std::array<QuadHybrid, 2> alpha;
    std::array<QuadHybrid, 2> beta;

    const QuadHybrid& alpha_xi(int xi) const { return alpha.at(static_cast<std::size_t>(xi)); }
    const QuadHybrid& beta_xi(int xi) const { return beta.at(static_cast<std::size_t>(xi)); }
};

inline QuadHybrid root_hybrid(const SeqParams& p, const QuadExt& root, int xi) {
    const Rational& a = p.a();
    const Rational& b = p.b();
    Rational ratio = pow(a / b, xi);
    QuadExt sq = root * root;
    QuadExt cube = sq * root;
    return {p.lift(1), root * (ratio / a), sq / (a * b), cube * (ratio / (a * a * b))};
}

inline RootHybrid root_hybrids(const SeqParams& p) {
    return {{root_hybrid(p, p.alpha(), 0), root_hybrid(p, p.alpha(), 1)},
            {root_hybrid(p, p.beta(), 0), root_hybrid(p, p.beta(), 1)}};
}

/// K_{w,n} = a^{ξ(n+1)}/(ab)^{floor(n/2)} (A α_{ξ(n)} α^n - B β_{ξ(n)} β^n), n >= 0.
/// Negative n has no stated closed form and is rejected.
inline QuadHybrid hybrid_term_binet(const SeqParams& p, const RootHybrid& roots, long n) {
    if (n < 0) throw std::invalid_argument("hybrid_term_binet: n must be >= 0");
    int xi = parity(n);
    QuadExt ca = p.A() * quad_pow(p.alpha(), n);
    QuadExt cb = p.B() * quad_pow(p.beta(), n);
    QuadHybrid inner = ca * roots.alpha_xi(xi) - cb * roots.beta_xi(xi);
    return binet_prefactor(p.a(), p.b(), n) * inner;
}

inline QuadHybrid hybrid_term_binet(const HybridSeq& hs, long n) {
    SeqParams p(hs.params());
    return hybrid_term_binet(p, root_hybrids(p), n);
}

inline RationalHybrid hybrid_term(const HybridSeq& hs, long n) { return hs.term(n); }
inline Rational hybrid_character_seq(const HybridSeq& hs, long n) { return hs.character(n); }

// ---------------------------------------------------------------------------
// Named special cases

/// One slot of a family tuple: `coef` alone, or `coef * free[param]`.
struct FamilySlot {
    Rational coef;
    int param = -1;

    Rational resolve(std::span<const Rational> free) const {
        return param < 0 ? coef : coef * free[static_cast<std::size_t>(param)];
    }
};

struct NamedFamily {
    std::string name;
    std::string symbol;
    std::string description;
    std::vector<std::string> free_params;
    FamilySlot w0, w1, a, b, c;

    RecurrenceParams instantiate(std::span<const Rational> free) const {
        if (free.size() != free_params.size())
            throw invalid_parameters("family '" + name + "' takes " + std::to_string(free_params.size()) +
                                     " free parameter(s), got " + std::to_string(free.size()));
        return RecurrenceParams::make(a.resolve(free), b.resolve(free), c.resolve(free), w0.resolve(free),
                                      w1.resolve(free));
    }

    /// "(w0,w1;a,b,c)" with free parameters by name.
    std::string tuple_str() const {
        auto show = [this](const FamilySlot& s) {
            if (s.param < 0) return s.coef.str();
            const std::string& nm = free_params[static_cast<std::size_t>(s.param)];
            if (s.coef == Rational(1)) return nm;
            if (s.coef == Rational(-1)) return "-" + nm;
            return s.coef.str() + "*" + nm;
        };
        return "(" + show(w0) + "," + show(w1) + ";" + show(a) + "," + show(b) + "," + show(c) + ")";
    }
};

/// The twelve special cases of K_{w,n}, in table order.
inline const std::vector<NamedFamily>& named_families() {
    auto fixed = [](long v) { return FamilySlot{Rational(v)}; };
    auto free = [](int idx, long coef = 1) { return FamilySlot{Rational(coef), idx}; };
    static const std::vector<NamedFamily> table = {
        {"gen-bi-periodic-fibonacci", "K_{u,n}", "generalized bi-periodic Fibonacci hybrid numbers",
         {"a", "b", "c"}, fixed(0), fixed(1), free(0), free(1), free(2)},
        {"gen-bi-periodic-lucas", "K_{v,n}", "generalized bi-periodic Lucas hybrid numbers",
         {"a", "b", "c"}, fixed(2), free(1), free(0), free(1), free(2)},
        {"horadam", "K_{W,n}", "Horadam hybrid numbers",
         {"W0", "W1", "p", "q"}, free(0), free(1), free(2), free(2), free(3, -1)},
        {"pq-fibonacci", "K_{U,n}", "(p,q)-Fibonacci hybrid numbers",
         {"p", "q"}, fixed(0), fixed(1), free(0), free(0), free(1)},
        {"pq-lucas", "K_{V,n}", "(p,q)-Lucas hybrid numbers",
         {"p", "q"}, fixed(2), free(0), free(0), free(0), free(1)},
        {"fibonacci", "K_{F,n}", "Fibonacci hybrid numbers", {}, fixed(0), fixed(1), fixed(1), fixed(1), fixed(1)},
        {"lucas", "K_{L,n}", "Lucas hybrid numbers", {}, fixed(2), fixed(1), fixed(1), fixed(1), fixed(1)},
        {"pell", "K_{P,n}", "Pell hybrid numbers", {}, fixed(0), fixed(1), fixed(2), fixed(2), fixed(1)},
        {"pell-lucas", "K_{Q,n}", "Pell-Lucas hybrid numbers", {}, fixed(2), fixed(2), fixed(2), fixed(2), fixed(1)},
        {"k-pell", "K_{kP,n}", "k-Pell hybrid numbers", {"k"}, fixed(0), fixed(1), fixed(2), fixed(2), free(0)},
        {"jacobsthal", "K_{J,n}", "Jacobsthal hybrid numbers", {}, fixed(0), fixed(1), fixed(1), fixed(1), fixed(2)},
        {"jacobsthal-lucas", "K_{j,n}", "Jacobsthal-Lucas hybrid numbers",
         {}, fixed(2), fixed(1), fixed(1), fixed(1), fixed(2)},
    };
    return table;
}

inline const NamedFamily& find_family(std::string_view name) {
    for (const auto& f : named_families())
        if (f.name == name) return f;
    throw unknown_family("unknown family '" + std::string(name) + "'");
}

inline HybridSeq family_lookup(std::string_view name, std::span<const Rational> free = {}) {
    RecurrenceParams p = find_family(name).instantiate(free);
    SeqKind kind = kind_of(p);
    return HybridSeq(std::move(p), kind);
}

}  // namespace hybridseq
