#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridseq/identities.hpp"
#include "hybridseq/io.hpp"

namespace hybridseq {

enum class IdentityKind {
    binet,
    negative_index,
    root_power,
    u_v_relation,
    hybrid_binet,
    four_term_recurrence,
    character,
    generating_function,
    lemma_products,
    lemma_squares,
    vajda,
    catalan,
    cassini_matrix,
    summation,
    binomial_sums,
    fib_lucas_relations,
};

inline constexpr std::array all_identities = {
    IdentityKind::binet,          IdentityKind::negative_index,      IdentityKind::root_power,
    IdentityKind::u_v_relation,   IdentityKind::hybrid_binet,        IdentityKind::four_term_recurrence,
    IdentityKind::character,      IdentityKind::generating_function, IdentityKind::lemma_products,
    IdentityKind::lemma_squares,  IdentityKind::vajda,               IdentityKind::catalan,
    IdentityKind::cassini_matrix, IdentityKind::summation,           IdentityKind::binomial_sums,
    IdentityKind::fib_lucas_relations,
};

inline std::string_view identity_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::binet: return "binet";
        case IdentityKind::negative_index: return "negative_index";
        case IdentityKind::root_power: return "root_power";
        case IdentityKind::u_v_relation: return "u_v_relation";
        case IdentityKind::hybrid_binet: return "hybrid_binet";
        case IdentityKind::four_term_recurrence: return "four_term_recurrence";
        case IdentityKind::character: return "character";
        case IdentityKind::generating_function: return "generating_function";
        case IdentityKind::lemma_products: return "lemma_products";
        case IdentityKind::lemma_squares: return "lemma_squares";
        case IdentityKind::vajda: return "vajda";
        case IdentityKind::catalan: return "catalan";
        case IdentityKind::cassini_matrix: return "cassini_matrix";
        case IdentityKind::summation: return "summation";
        case IdentityKind::binomial_sums: return "binomial_sums";
        case IdentityKind::fib_lucas_relations: return "fib_lucas_relations";
    }
    return "?";
}

inline IdentityKind identity_from_name(std::string_view name) {
    for (auto k : all_identities)
        if (identity_name(k) == name) return k;
    throw parse_error("unknown identity '" + std::string(name) + "'");
}

struct IndexRange {
    long lo = 0;
    long hi = 0;
};

/// Index ranges per checker; defaults are the full verification suite.
struct SweepRanges {
    IndexRange binet{0, 40};
    IndexRange negative_index{1, 20};
    IndexRange root_power{1, 20};
    IndexRange u_v_relation{0, 40};
    IndexRange hybrid_binet{0, 30};
    IndexRange four_term_recurrence{4, 40};
    IndexRange character{0, 30};
    long generating_function_degree = 60;
    IndexRange vajda_n{0, 12}, vajda_r{0, 4}, vajda_s{0, 4};
    IndexRange catalan_n{0, 12}, catalan_r{0, 3};
    IndexRange cassini_n{1, 10};
    IndexRange summation_n{1, 25};
    IndexRange binomial_n{0, 15}, binomial_r{0, 4};
    IndexRange fib_lucas_n{1, 20};  // m runs over [0, n-1]
};

struct ParamSource {
    std::string label;  // family name, "grid" or "tuple"
    RecurrenceParams params;
    bool from_grid = false;
};

/// An identity/tuple pair whose structured error counts as a pass.
struct ExpectedError {
    std::string identity;
    std::optional<std::string> family;
    std::optional<RecurrenceParams> params;

    bool matches(std::string_view id, const ParamSource& src) const {
        if (id != identity) return false;
        if (family && *family == src.label) return true;
        return params && *params == src.params;
    }
};

/// a, b ∈ {1, 2, 3, -1, 5/2}, c ∈ {1, 2, -1, 3/2},
/// (w0, w1) ∈ {(0, 1), (2, b), (1, 1), (5, -4)}, minus tuples with Δ² = 0.
inline std::vector<RecurrenceParams> standard_grid() {
    const std::vector<Rational> ab_values = {1, 2, 3, -1, Rational(5, 2)};
    const std::vector<Rational> c_values = {1, 2, -1, Rational(3, 2)};
    std::vector<RecurrenceParams> grid;
    for (const auto& a : ab_values)
        for (const auto& b : ab_values)
            for (const auto& c : c_values) {
                RecurrenceParams base = RecurrenceParams::make(a, b, c, 0, 1);
                if (base.delta_sq().is_zero()) continue;
                for (auto [w0, w1] : std::array<std::pair<Rational, Rational>, 4>{
                         {{0, 1}, {2, b}, {1, 1}, {5, -4}}})
                    grid.push_back(base.with_initial(w0, w1));
            }
    return grid;
}

struct SweepConfig {
    std::vector<IdentityKind> identities{all_identities.begin(), all_identities.end()};
    bool use_standard_grid = true;
    std::vector<ParamSource> explicit_sources;
    SweepRanges ranges;
    std::vector<ExpectedError> expected_errors;

    std::vector<ParamSource> sources() const {
        std::vector<ParamSource> out;
        if (use_standard_grid)
            for (auto& p : standard_grid()) out.push_back({"grid", std::move(p), true});
        out.insert(out.end(), explicit_sources.begin(), explicit_sources.end());
        return out;
    }

    static SweepConfig default_config() { return {}; }

    /// Loads a config document; any violation throws parse_error or
    /// invalid_parameters.
    static SweepConfig from_json(const io::json& j) {
        if (!j.is_object()) throw parse_error("config must be a JSON object");
        static const std::vector<std::string> known = {"identities", "grid", "families", "tuples", "ranges",
                                                       "expected_errors"};
        for (const auto& [key, _] : j.items())
            if (std::find(known.begin(), known.end(), key) == known.end())
                throw parse_error("unknown config key '" + key + "'");

        SweepConfig cfg;
        if (j.contains("identities")) {
            const auto& ids = j.at("identities");
            if (!ids.is_array()) throw parse_error("'identities' must be an array");
            if (ids.empty()) throw parse_error("'identities' is empty; nothing to verify");
            cfg.identities.clear();
            for (const auto& id : ids) cfg.identities.push_back(identity_from_name(id.get<std::string>()));
        }

        if (j.contains("families")) {
            for (const auto& f : j.at("families")) {
                std::string name = f.at("name").get<std::string>();
                std::vector<Rational> free;
                if (f.contains("params"))
                    for (const auto& v : f.at("params")) free.push_back(io::rational_from_json(v));
                RecurrenceParams p = find_family(name).instantiate(free);
                require_binet(p);
                cfg.explicit_sources.push_back({name, std::move(p), false});
            }
        }
        if (j.contains("tuples")) {
            for (const auto& t : j.at("tuples")) {
                RecurrenceParams p = io::params_from_json(t);
                require_binet(p);
                cfg.explicit_sources.push_back({"tuple", std::move(p), false});
            }
        }
        cfg.use_standard_grid = j.value("grid", cfg.explicit_sources.empty());
        if (!cfg.use_standard_grid && cfg.explicit_sources.empty())
            throw parse_error("no parameter tuples: enable 'grid' or list 'families'/'tuples'");

        if (j.contains("ranges")) read_ranges(j.at("ranges"), cfg.ranges);

        if (j.contains("expected_errors")) {
            for (const auto& e : j.at("expected_errors")) {
                ExpectedError ee;
                ee.identity = std::string(identity_name(identity_from_name(e.at("identity").get<std::string>())));
                if (e.contains("family")) ee.family = e.at("family").get<std::string>();
                if (e.contains("params")) ee.params = io::params_from_json(e.at("params"));
                if (!ee.family && !ee.params) throw parse_error("expected_errors entry needs 'family' or 'params'");
                cfg.expected_errors.push_back(std::move(ee));
            }
        }
        return cfg;
    }

private:
    static void require_binet(const RecurrenceParams& p) {
        if (p.delta_sq().is_zero())
            throw invalid_parameters("a^2 b^2 + 4abc = 0 for " + p.str() + "; identities need distinct roots");
    }

    static IndexRange read_range(const io::json& j) {
        if (!j.is_array() || j.size() != 2) throw parse_error("range must be [lo, hi], got " + j.dump());
        IndexRange r{j[0].get<long>(), j[1].get<long>()};
        if (r.lo > r.hi) throw parse_error("empty range " + j.dump());
        return r;
    }

    static void read_ranges(const io::json& j, SweepRanges& r) {
        auto one = [&](const char* key, const char* field, IndexRange& dst) {
            if (j.contains(key) && j.at(key).contains(field)) dst = read_range(j.at(key).at(field));
        };
        for (const auto& [key, _] : j.items()) identity_from_name(key);
        one("binet", "n", r.binet);
        one("negative_index", "n", r.negative_index);
        one("root_power", "m", r.root_power);
        one("u_v_relation", "n", r.u_v_relation);
        one("hybrid_binet", "n", r.hybrid_binet);
        one("four_term_recurrence", "n", r.four_term_recurrence);
        one("character", "n", r.character);
        if (j.contains("generating_function") && j.at("generating_function").contains("degree")) {
            r.generating_function_degree = j.at("generating_function").at("degree").get<long>();
            if (r.generating_function_degree < 4) throw parse_error("generating_function degree must be >= 4");
        }
        one("vajda", "n", r.vajda_n);
        one("vajda", "r", r.vajda_r);
        one("vajda", "s", r.vajda_s);
        one("catalan", "n", r.catalan_n);
        one("catalan", "r", r.catalan_r);
        one("cassini_matrix", "n", r.cassini_n);
        one("summation", "n", r.summation_n);
        one("binomial_sums", "n", r.binomial_n);
        one("binomial_sums", "r", r.binomial_r);
        one("fib_lucas_relations", "n", r.fib_lucas_n);
        if (r.negative_index.lo < 1 || r.root_power.lo < 1 || r.cassini_n.lo < 1 || r.summation_n.lo < 1 ||
            r.fib_lucas_n.lo < 1)
            throw parse_error("negative_index, root_power, cassini_matrix, summation and fib_lucas_relations "
                              "ranges start at 1");
        if (r.binet.lo < 0 || r.hybrid_binet.lo < 0 || r.u_v_relation.lo < 0 || r.vajda_n.lo < 0 ||
            r.vajda_r.lo < 0 || r.vajda_s.lo < 0 || r.catalan_r.lo < 0 || r.binomial_n.lo < 0 ||
            r.binomial_r.lo < 0 || r.four_term_recurrence.lo < 4)
            throw parse_error("index range below the identity's domain");
    }
};

struct SummaryRow {
    std::string identity;
    std::size_t tuples = 0;
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t expected_errors = 0;
    std::size_t skipped = 0;
};

struct SweepSummary {
    std::vector<SummaryRow> rows;
    double seconds = 0.0;

    bool all_passed() const {
        return std::all_of(rows.begin(), rows.end(), [](const SummaryRow& r) { return r.failed == 0; });
    }
    std::size_t total_failed() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.failed;
        return n;
    }
    const SummaryRow* find(std::string_view id) const {
        for (const auto& r : rows)
            if (r.identity == id) return &r;
        return nullptr;
    }
};

inline void write_summary_csv(std::ostream& os, const SweepSummary& s) {
    io::write_csv_row(os, {"identity", "grid_size", "checks", "passes", "failures", "expected_errors", "skipped"});
    for (const auto& r : s.rows)
        io::write_csv_row(os, {r.identity, std::to_string(r.tuples), std::to_string(r.checks), std::to_string(r.passed),
                               std::to_string(r.failed), std::to_string(r.expected_errors),
                               std::to_string(r.skipped)});
}

using ReportSink = std::function<void(const IdentityReport&)>;

namespace detail {

/// Runs every index tuple of one identity on one context, in canonical order.
inline void run_identity(IdentityKind kind, const IdentityContext& ctx, const SweepRanges& rg,
                         const std::function<void(std::vector<long>, const std::function<IdentityReport()>&)>& emit) {
    auto each = [](IndexRange r, auto&& f) {
        for (long k = r.lo; k <= r.hi; ++k) f(k);
    };
    switch (kind) {
        case IdentityKind::binet:
            each(rg.binet, [&](long n) { emit({n}, [&] { return check_binet(ctx, n); }); });
            break;
        case IdentityKind::negative_index:
            each(rg.negative_index, [&](long n) { emit({n}, [&] { return check_negative_index(ctx, n); }); });
            break;
        case IdentityKind::root_power:
            each(rg.root_power, [&](long m) { emit({m}, [&] { return check_root_powers(ctx, m); }); });
            break;
        case IdentityKind::u_v_relation:
            each(rg.u_v_relation, [&](long n) { emit({n}, [&] { return check_u_v_relation(ctx, n); }); });
            break;
        case IdentityKind::hybrid_binet:
            each(rg.hybrid_binet, [&](long n) { emit({n}, [&] { return check_hybrid_binet(ctx, n); }); });
            break;
        case IdentityKind::four_term_recurrence:
            each(rg.four_term_recurrence,
                 [&](long n) { emit({n}, [&] { return check_four_term_recurrence(ctx, n); }); });
            break;
        case IdentityKind::character:
            each(rg.character, [&](long n) { emit({n}, [&] { return check_character(ctx, n); }); });
            break;
        case IdentityKind::generating_function: {
            long d = rg.generating_function_degree;
            emit({d}, [&] { return check_generating_function(ctx, d); });
            break;
        }
        case IdentityKind::lemma_products:
            for (int xi : {0, 1}) emit({xi}, [&] { return check_lemma_products(ctx, xi); });
            break;
        case IdentityKind::lemma_squares:
            for (int xi : {0, 1}) emit({xi}, [&] { return check_lemma_squares(ctx, xi); });
            break;
        case IdentityKind::vajda:
            each(rg.vajda_n, [&](long n) {
                each(rg.vajda_r, [&](long r) {
                    each(rg.vajda_s, [&](long s) { emit({n, r, s}, [&] { return check_vajda(ctx, n, r, s); }); });
                });
            });
            break;
        case IdentityKind::catalan:
            each(rg.catalan_n, [&](long n) {
                each(rg.catalan_r, [&](long r) { emit({n, r}, [&] { return check_catalan(ctx, n, r); }); });
            });
            break;
        case IdentityKind::cassini_matrix:
            each(rg.cassini_n, [&](long n) { emit({n}, [&] { return check_cassini_and_matrix(ctx, n); }); });
            break;
        case IdentityKind::summation:
            each(rg.summation_n, [&](long n) { emit({n}, [&] { return check_summation(ctx, n); }); });
            break;
        case IdentityKind::binomial_sums:
            each(rg.binomial_n, [&](long n) {
                each(rg.binomial_r, [&](long r) { emit({n, r}, [&] { return check_binomial_sums(ctx, n, r); }); });
            });
            break;
        case IdentityKind::fib_lucas_relations:
            each(rg.fib_lucas_n, [&](long n) {
                for (long m = 0; m < n; ++m) emit({n, m}, [&] { return check_fib_lucas_relations(ctx, n, m); });
            });
            break;
    }
}

/// Preconditions the standard grid filters on; explicit tuples are run regardless.
inline bool grid_precondition(IdentityKind kind, const IdentityContext& ctx) {
    if (kind == IdentityKind::summation) {
        Rational den = ctx.c() * ctx.c() - ctx.a() * ctx.b() - Rational(2) * ctx.c() + Rational(1);
        return !den.is_zero();
    }
    return true;
}

}  // namespace detail

/// Runs the configured identities over every source, identity-major, emitting
/// each report to `sink` in a fixed order. Structured errors become failed
/// reports unless declared expected.
inline SweepSummary run_sweep(const SweepConfig& cfg, const ReportSink& sink = {}) {
    auto start = std::chrono::steady_clock::now();
    std::vector<ParamSource> sources = cfg.sources();
    std::vector<IdentityContext> contexts;
    contexts.reserve(sources.size());
    for (const auto& s : sources) contexts.emplace_back(s.params);

    SweepSummary summary;
    for (IdentityKind kind : cfg.identities) {
        SummaryRow row;
        row.identity = std::string(identity_name(kind));
        row.tuples = sources.size();
        for (std::size_t t = 0; t < sources.size(); ++t) {
            const auto& src = sources[t];
            const auto& ctx = contexts[t];
            bool precondition = !src.from_grid || detail::grid_precondition(kind, ctx);
            detail::run_identity(kind, ctx, cfg.ranges,
                                 [&](std::vector<long> indices, const std::function<IdentityReport()>& check) {
                                     IdentityReport rep;
                                     if (!precondition) {
                                         rep.identity = row.identity;
                                         rep.params = src.params;
                                         rep.indices = std::move(indices);
                                         rep.skipped = true;
                                         ++row.skipped;
                                     } else {
                                         try {
                                             rep = check();
                                         } catch (const std::exception& e) {
                                             rep = IdentityReport{};
                                             rep.identity = row.identity;
                                             rep.params = src.params;
                                             rep.indices = std::move(indices);
                                             rep.error = e.what();
                                             bool expected = std::any_of(
                                                 cfg.expected_errors.begin(), cfg.expected_errors.end(),
                                                 [&](const ExpectedError& ee) { return ee.matches(row.identity, src); });
                                             rep.expected_error = expected;
                                             rep.passed = expected;
                                         }
                                         ++row.checks;
                                         if (rep.expected_error)
                                             ++row.expected_errors;
                                         else if (rep.passed)
                                             ++row.passed;
                                         else
                                             ++row.failed;
                                     }
                                     if (sink) sink(rep);
                                 });
        }
        summary.rows.push_back(std::move(row));
    }
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

}  // namespace hybridseq
