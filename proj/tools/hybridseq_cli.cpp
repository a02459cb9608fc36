// hybridseq: compute bi-periodic Horadam (hybrid) terms, list the named
// families and run identity sweeps.
//
// Exit codes: 0 success, 1 identity failure, 2 usage or config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hybridseq/hybridseq.hpp"

namespace {

using namespace hybridseq;

constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kUsageError = 2;

struct TermOptions {
    std::string family;
    std::vector<std::string> free_params;
    std::optional<std::string> a, b, c, w0, w1;
    std::optional<long> n, from, to;
    bool hybrid = false;
    bool binet = false;
    std::string format = "json";
    std::string out;
};

struct VerifyOptions {
    std::string config;
    std::string out;
    std::string summary;
    std::string format = "json";
};

/// Owns a file stream when a path is given, otherwise borrows stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

RecurrenceParams params_from(const TermOptions& o) {
    bool any_raw = o.a || o.b || o.c || o.w0 || o.w1;
    if (!o.family.empty()) {
        if (any_raw) throw invalid_parameters("--family cannot be combined with --a/--b/--c/--w0/--w1");
        std::vector<Rational> free;
        for (const auto& s : o.free_params) free.push_back(Rational::parse(s));
        return find_family(o.family).instantiate(free);
    }
    if (!o.free_params.empty()) throw invalid_parameters("--param requires --family");
    if (!(o.a && o.b && o.c && o.w0 && o.w1))
        throw invalid_parameters("give --family or all of --a --b --c --w0 --w1");
    return RecurrenceParams::make(Rational::parse(*o.a), Rational::parse(*o.b), Rational::parse(*o.c),
                                  Rational::parse(*o.w0), Rational::parse(*o.w1));
}

int cmd_term(const TermOptions& o) {
    RecurrenceParams p = params_from(o);
    long lo = 0, hi = 0;
    if (o.n) {
        if (o.from || o.to) throw invalid_parameters("--n cannot be combined with --from/--to");
        lo = hi = *o.n;
    } else if (o.from && o.to) {
        lo = *o.from;
        hi = *o.to;
        if (lo > hi) throw invalid_parameters("--from must not exceed --to");
    } else {
        throw invalid_parameters("give --n or both --from and --to");
    }

    std::optional<SeqParams> sp;
    std::optional<RootHybrid> roots;
    if (o.binet) {
        if (lo < 0) throw invalid_parameters("--binet needs n >= 0");
        sp.emplace(p);  // throws when Δ² = 0
        roots = root_hybrids(*sp);
    }

    HybridSeq hs(p, kind_of(p));
    Output out(o.out);
    auto& os = out.stream();
    if (o.format == "csv") {
        auto header = io::term_csv_header(o.hybrid);
        if (o.binet) header.push_back("binet");
        io::write_csv_row(os, header);
    }

    int status = kOk;
    for (long n = lo; n <= hi; ++n) {
        io::TermRecord rec{n, hs.sequence()(n), std::nullopt, std::nullopt};
        if (o.hybrid) {
            rec.hybrid = hs.term(n);
            rec.character = hs.character(n);
        }
        std::optional<QuadExt> binet;
        if (o.binet) {
            binet = term_binet(*sp, n);
            bool ok = *binet == sp->lift(rec.w);
            if (o.hybrid) ok = ok && hybrid_term_binet(*sp, *roots, n) == lift(*rec.hybrid, sp->delta_sq());
            if (!ok) {
                std::cerr << "binet mismatch at n=" << n << " for " << p.str() << "\n";
                status = kIdentityFailure;
            }
        }
        if (o.format == "csv") {
            auto row = io::term_csv_row(rec);
            if (binet) row.push_back(binet->str());
            io::write_csv_row(os, row);
        } else {
            auto j = io::to_json(rec);
            if (binet) j["binet"] = binet->str();
            os << j.dump() << "\n";
        }
    }
    return status;
}

int cmd_families(const std::string& format, const std::string& path) {
    Output out(path);
    auto& os = out.stream();
    if (format == "csv") io::write_csv_row(os, {"name", "symbol", "tuple", "free_params", "description"});
    for (const auto& f : named_families()) {
        std::string free;
        for (std::size_t k = 0; k < f.free_params.size(); ++k) free += (k ? " " : "") + f.free_params[k];
        if (format == "csv") {
            io::write_csv_row(os, {f.name, f.symbol, f.tuple_str(), free, f.description});
        } else {
            io::json j{{"name", f.name},
                       {"symbol", f.symbol},
                       {"tuple", f.tuple_str()},
                       {"free_params", f.free_params},
                       {"description", f.description}};
            os << j.dump() << "\n";
        }
    }
    return kOk;
}

int cmd_verify(const VerifyOptions& o) {
    SweepConfig cfg;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw std::runtime_error("cannot read config '" + o.config + "'");
        io::json doc;
        try {
            doc = io::json::parse(in);
        } catch (const io::json::exception& e) {
            throw parse_error(std::string("config is not valid JSON: ") + e.what());
        }
        cfg = SweepConfig::from_json(doc);
    }

    std::optional<Output> reports;
    if (!o.out.empty()) reports.emplace(o.out);
    if (reports && o.format == "csv") io::write_csv_row(reports->stream(), io::report_csv_header());

    std::string last_error;
    SweepSummary summary = run_sweep(cfg, [&](const IdentityReport& r) {
        if (r.error.size() && !r.expected_error && r.error != last_error) {
            std::cerr << r.identity << ": " << r.error << "\n";
            last_error = r.error;
        }
        if (!reports) return;
        if (o.format == "csv")
            io::write_csv_row(reports->stream(), io::report_csv_row(r));
        else
            reports->stream() << io::to_json(r).dump() << "\n";
    });

    Output sum(o.summary);
    write_summary_csv(sum.stream(), summary);
    std::cerr << "verify: " << summary.total_failed() << " failure(s) in " << summary.seconds << " s\n";
    return summary.all_passed() ? kOk : kIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bi-periodic Horadam hybrid numbers and identity verification"};
    app.require_subcommand(1);

    TermOptions term_opts;
    TermOptions hybrid_opts;
    hybrid_opts.hybrid = true;
    auto add_term_flags = [](CLI::App* sub, TermOptions& o, bool hybrid_flag) {
        sub->add_option("--family", o.family, "named family (see `families`)");
        sub->add_option("--param", o.free_params, "free family parameter, in order (repeatable)");
        sub->add_option("--a", o.a, "coefficient for even steps");
        sub->add_option("--b", o.b, "coefficient for odd steps");
        sub->add_option("--c", o.c, "coefficient of w_{n-2}");
        sub->add_option("--w0", o.w0, "initial value w_0");
        sub->add_option("--w1", o.w1, "initial value w_1");
        sub->add_option("--n", o.n, "single index");
        sub->add_option("--from", o.from, "first index");
        sub->add_option("--to", o.to, "last index");
        if (hybrid_flag) sub->add_flag("--hybrid", o.hybrid, "also emit K_{w,n} and its character");
        sub->add_flag("--binet", o.binet, "cross-check against the Binet form");
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", o.out, "output path (default stdout)");
    };

    auto* term = app.add_subcommand("term", "terms w_n (optionally K_{w,n})");
    add_term_flags(term, term_opts, true);
    auto* hybrid = app.add_subcommand("hybrid", "hybrid terms K_{w,n} with characters");
    add_term_flags(hybrid, hybrid_opts, false);

    std::string fam_format = "json", fam_out;
    auto* families = app.add_subcommand("families", "list the named special cases");
    families->add_option("--format", fam_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    families->add_option("--out", fam_out, "output path (default stdout)");

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "run identity sweeps");
    verify->add_option("--config", verify_opts.config, "sweep config JSON (default: full suite on the standard grid)");
    verify->add_option("--out", verify_opts.out, "per-check reports (JSON lines or CSV)");
    verify->add_option("--summary", verify_opts.summary, "summary CSV path (default stdout)");
    verify->add_option("--format", verify_opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (term->parsed()) return cmd_term(term_opts);
        if (hybrid->parsed()) return cmd_term(hybrid_opts);
        if (families->parsed()) return cmd_families(fam_format, fam_out);
        if (verify->parsed()) return cmd_verify(verify_opts);
    } catch (const hybridseq::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
