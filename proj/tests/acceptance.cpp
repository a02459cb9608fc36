// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is nonzero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hybridseq/hybridseq.hpp"

#ifndef HYBRIDSEQ_CLI_PATH
#error "HYBRIDSEQ_CLI_PATH must name the hybridseq executable"
#endif

using namespace hybridseq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

SweepConfig only(std::initializer_list<IdentityKind> ids) {
    SweepConfig cfg;
    cfg.identities.assign(ids.begin(), ids.end());
    return cfg;
}

std::string counts(const SweepSummary& s) {
    std::ostringstream os;
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
        const auto& r = s.rows[k];
        os << (k ? "; " : "") << r.identity << " " << r.passed << "/" << r.checks << " pass";
        if (r.skipped) os << ", " << r.skipped << " skipped";
    }
    return os.str();
}

Outcome criterion_binet() {
    auto grid = standard_grid();
    auto t0 = Clock::now();
    std::size_t bad = 0, checks = 0;
    for (const auto& p : grid) {
        SeqParams sp(p);
        Sequence w(p);
        for (long n = 0; n <= 40; ++n, ++checks) {
            QuadExt x = term_binet(sp, n);
            if (!x.is_rational() || x.rat() != w(n)) ++bad;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream os;
    os << grid.size() << " tuples, " << checks - bad << "/" << checks << " exact, " << secs << " s (limit 10 s)";
    return {grid.size() >= 40 && bad == 0 && secs < 10.0, os.str()};
}

Outcome sweep_criterion(std::initializer_list<IdentityKind> ids) {
    auto s = run_sweep(only(ids));
    return {s.all_passed(), counts(s)};
}

Outcome criterion_lemmas() {
    std::size_t a_ne_b = 0;
    for (const auto& p : standard_grid())
        if (p.a != p.b) ++a_ne_b;
    auto s = run_sweep(only({IdentityKind::lemma_products, IdentityKind::lemma_squares}));
    std::ostringstream os;
    os << counts(s) << "; tuples with a != b: " << a_ne_b;
    return {s.all_passed() && a_ne_b >= 10, os.str()};
}

Outcome criterion_products() {
    auto s = run_sweep(only({IdentityKind::vajda, IdentityKind::catalan, IdentityKind::cassini_matrix}));
    bool negative_inner = false;  // Catalan reaches n - 2r < 0 inside the default ranges
    SweepRanges rg;
    negative_inner = rg.catalan_n.lo - 2 * rg.catalan_r.hi < 0;
    bool witness = false;
    for (const auto& p : standard_grid()) {
        HybridSeq w(p, kind_of(p));
        if (w(4) * w(0) != w(0) * w(4)) {
            witness = true;
            break;
        }
    }
    std::ostringstream os;
    os << counts(s) << "; negative inner index covered: " << (negative_inner ? "yes" : "no")
       << "; K4*K0 != K0*K4 witness: " << (witness ? "yes" : "no");
    return {s.all_passed() && negative_inner && witness, os.str()};
}

Outcome criterion_summation() {
    auto s = run_sweep(only({IdentityKind::summation}));

    SweepConfig jac = only({IdentityKind::summation});
    jac.use_standard_grid = false;
    jac.explicit_sources.push_back({"jacobsthal", find_family("jacobsthal").instantiate({}), false});
    bool denominator_error = false;
    run_sweep(jac, [&](const IdentityReport& r) {
        if (r.error.find("summation denominator zero") != std::string::npos) denominator_error = true;
    });
    const auto* row = s.find("summation");
    std::ostringstream os;
    os << counts(s) << "; jacobsthal denominator error: " << (denominator_error ? "yes" : "no");
    return {s.all_passed() && row && row->passed > 0 && denominator_error, os.str()};
}

Outcome criterion_binomial() {
    bool exponent_fired = false;
    auto s = run_sweep(only({IdentityKind::binomial_sums}), [&](const IdentityReport& r) {
        if (r.error.find("exponent") != std::string::npos) exponent_fired = true;
    });
    std::ostringstream os;
    os << counts(s) << "; integrality assertion fired: " << (exponent_fired ? "yes" : "no");
    return {s.all_passed() && !exponent_fired, os.str()};
}

// Independent oracles for the specializations: plain single recurrences.
std::vector<Rational> classical(Rational x0, Rational x1, Rational p, Rational q, long len) {
    std::vector<Rational> seq{x0, x1};
    while (static_cast<long>(seq.size()) < len) {
        auto k = seq.size();
        seq.push_back(p * seq[k - 1] - q * seq[k - 2]);
    }
    return seq;
}

Outcome criterion_specializations() {
    std::size_t bad = 0, checks = 0;
    auto fib = classical(0, 1, 1, -1, 34);
    auto kf = family_lookup("fibonacci");
    for (long n = 0; n <= 30; ++n, ++checks) {
        auto k = kf(n);
        auto un = static_cast<std::size_t>(n);
        if (k.re != fib[un] || k.i != fib[un + 1] || k.eps != fib[un + 2] || k.h != fib[un + 3]) ++bad;
    }
    const std::pair<long, long> pq[] = {{1, -1}, {2, -1}, {3, 2}};
    const std::pair<long, long> starts[] = {{0, 1}, {2, 1}, {3, -2}};
    for (auto [p, q] : pq)
        for (auto [x0, x1] : starts) {
            std::vector<Rational> free = {x0, x1, p, q};
            auto kh = family_lookup("horadam", free);
            auto ref = classical(x0, x1, p, q, 34);
            for (long n = 0; n <= 30; ++n, ++checks) {
                auto k = kh(n);
                auto un = static_cast<std::size_t>(n);
                if (k.re != ref[un] || k.i != ref[un + 1] || k.eps != ref[un + 2] || k.h != ref[un + 3]) ++bad;
            }
        }
    std::ostringstream os;
    os << checks - bad << "/" << checks << " hybrid terms match the single-recurrence oracles";
    return {bad == 0, os.str()};
}

Outcome criterion_full_verify() {
    auto t0 = Clock::now();
    std::string cmd = std::string(HYBRIDSEQ_CLI_PATH) + " verify --summary /dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    double secs = seconds_since(t0);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ostringstream os;
    os << "exit " << code << " in " << secs << " s (limit 60 s, exit 0 required)";
    return {code == 0 && secs < 60.0, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"binet matches recurrence on the grid, n in [0,40], under 10 s", criterion_binet},
        {"hybrid binet matches the componentwise terms, n in [0,30]",
         [] { return sweep_criterion({IdentityKind::hybrid_binet}); }},
        {"generating function coefficientwise to degree 60",
         [] { return sweep_criterion({IdentityKind::generating_function}); }},
        {"root-hybrid lemma products and squares, both parities", criterion_lemmas},
        {"vajda, catalan, cassini, matrix power and ordered determinants", criterion_products},
        {"summation for n in [1,25], denominator-zero error on jacobsthal", criterion_summation},
        {"binomial sums for n in [0,15], r in [0,4]", criterion_binomial},
        {"fibonacci-lucas relations for n in [1,20], m in [0,n-1]",
         [] { return sweep_criterion({IdentityKind::fib_lucas_relations}); }},
        {"root power expansions for m in [1,20]", [] { return sweep_criterion({IdentityKind::root_power}); }},
        {"named family specializations against independent recurrences", criterion_specializations},
        {"full verify suite exits 0 in under 60 s", criterion_full_verify},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": " << criteria[k].first << "  ["
                  << o.detail << "]" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failed ? 1 : 0;
}
