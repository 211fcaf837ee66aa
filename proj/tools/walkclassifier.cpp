// walkclassifier: lattice walk classification driver.
//
// Subcommands wrap the library pipeline: expand series, guess and certify
// annihilating equations, fit coefficient asymptotics, run classification
// campaigns over every small step set, and diff the resulting database
// against the embedded reference tables.
//
// Exit codes: 0 ok, 2 mismatch against tables or oracle, 3 campaign finished
// with per-class failures, 4 bad configuration.

#include "CLI11.hpp"

#include "walkclass/classify.hpp"
#include "walkclass/fixtures.hpp"
#include "walkclass/ore.hpp"

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace walkclass;

namespace {

struct CommonArgs {
    std::string steps;
    int dim = 2;
    int terms = 0; // 0: subcommand default
    std::string spec;
    int max_order = 0;  // 0: keep the per-gadget default
    int max_degree = 0;
    int primes = 0;
    int margin = 0;
    int jobs = 1;
    std::string db;
    std::string cache;
    bool long_run = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool wants_steps) {
    auto* steps = cmd->add_option("--steps", a.steps,
                                  "step set: 8 or 26 char bitstring, or 2D compass names like NE,W,S");
    if (wants_steps) steps->required();
    cmd->add_option("--dim", a.dim, "dimension (2 or 3)")->check(CLI::Range(2, 3));
    cmd->add_option("--terms", a.terms, "series length used for guessing");
    cmd->add_option("--spec", a.spec, "specialization, e.g. 1,1 or 0,0,0 (default all ones)");
    cmd->add_option("--max-order", a.max_order, "override the guessing order bound for every gadget");
    cmd->add_option("--max-degree", a.max_degree, "override the guessing degree bound for every gadget");
    cmd->add_option("--primes", a.primes, "guessing: max reconstruction primes; certifying: sieve prime count");
    cmd->add_option("--margin", a.margin, "oversampling rows beyond the unknown count");
    cmd->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--db", a.db, "JSON-lines result database");
    cmd->add_option("--cache", a.cache, "series cache directory")->envname("WALKCLASSIFIER_CACHE");
    cmd->add_flag("--long-run", a.long_run, "unlock the full 3D enumeration and its wide bounds");
}

StepSet parse_steps(const CommonArgs& a) {
    if (a.steps.find_first_not_of("01") == std::string::npos &&
        (a.steps.size() == 8 || a.steps.size() == 26))
        return StepSet::from_bits(a.steps);
    return StepSet::from_compass(a.steps);
}

Spec resolve_spec(const CommonArgs& a, int dim) {
    if (!a.spec.empty()) return parse_spec(a.spec, dim);
    return dim == 2 ? spec2(1, 1) : spec3(1, 1, 1);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        auto item = s.substr(pos, comma - pos);
        if (!item.empty()) out.push_back(item);
        pos = comma + 1;
    }
    return out;
}

ClassifyOptions build_options(const CommonArgs& a) {
    ClassifyOptions opt;
    opt.dim = a.dim;
    opt.spec = resolve_spec(a, a.dim);
    opt.long_run = a.long_run;
    opt.bounds = default_bounds(a.dim, a.long_run);
    if (a.terms > 0) opt.N = a.terms;
    if (a.max_order > 0)
        opt.bounds.rec.max_order = opt.bounds.ode.max_order = opt.bounds.alg.max_order = a.max_order;
    if (a.max_degree > 0)
        opt.bounds.rec.max_degree = opt.bounds.ode.max_degree = opt.bounds.alg.max_degree = a.max_degree;
    if (a.margin > 0)
        opt.bounds.rec.margin = opt.bounds.ode.margin = opt.bounds.alg.margin = a.margin;
    if (a.primes > 0) opt.sieve_primes = a.primes;
    opt.jobs = a.jobs;
    opt.db_path = a.db;
    opt.cache_dir = a.cache;
    if (!a.steps.empty()) opt.only_bits = split_csv(a.steps);
    return opt;
}

GuessConfig gadget_cfg(const Bounds& b, char which, const CommonArgs& a) {
    GuessConfig cfg = which == 'r' ? b.rec : which == 'o' ? b.ode : b.alg;
    if (a.max_order > 0) cfg.max_order = a.max_order;
    if (a.max_degree > 0) cfg.max_degree = a.max_degree;
    if (a.margin > 0) cfg.margin = a.margin;
    if (a.primes > 0) cfg.max_primes = a.primes;
    return cfg;
}

int cmd_expand(const CommonArgs& a, const std::string& out) {
    StepSet s = parse_steps(a);
    Spec spec = resolve_spec(a, s.dim);
    int N = a.terms > 0 ? a.terms : 20;
    if (!out.empty()) {
        // cache semantics: an existing file with a matching header wins
        if (auto hit = read_series_file(out, s, spec, N)) {
            std::printf("%s: cached, %d terms\n", out.c_str(), hit->terms());
            return 0;
        }
        SeriesZ f = expand_counts(s, spec, N);
        write_series_file(out, s, spec, f);
        std::printf("%s: written, %d terms\n", out.c_str(), f.terms());
        return 0;
    }
    SeriesZ f = expand_counts(s, spec, N);
    for (const Int& t : f.a) std::printf("%s\n", t.get_str().c_str());
    return 0;
}

int cmd_classify(const CommonArgs& a) {
    ClassifyOptions opt = build_options(a);
    std::vector<ClassificationRecord> records;
    CampaignSummary sum = run_campaign(opt, &records);
    for (const auto& r : records)
        std::printf("%s %-38s %s%s%s\n", r.bits.c_str(), r.verdict.c_str(),
                    r.oeis.empty() ? "" : r.oeis.c_str(),
                    r.note.empty() ? "" : "  note: ", r.note.c_str());
    std::printf("classes=%d dfinite=%d algebraic=%d none=%d degenerate=%d reused=%d failures=%d\n",
                sum.classes, sum.dfinite, sum.algebraic, sum.none, sum.degenerate,
                sum.reused, sum.failures);
    return sum.failures > 0 ? 3 : 0;
}

int cmd_check_tables(const CommonArgs& a, const std::string& rows) {
    if (a.db.empty()) throw CLI::ValidationError("--db is required");
    auto db = read_db(a.db);
    TableCheck tc = check_tables(db, a.dim, split_csv(rows));
    for (const auto& d : tc.details) std::printf("mismatch: %s\n", d.c_str());
    std::printf("rows=%d mismatches=%d\n", tc.rows_compared, tc.mismatches);
    return tc.mismatches > 0 ? 2 : 0;
}

int cmd_reversal(const CommonArgs& a) {
    if (a.db.empty()) throw CLI::ValidationError("--db is required");
    auto db = read_db(a.db);
    ReversalReport rr = reversal_report(db);
    for (const auto& d : rr.details) std::printf("%s\n", d.c_str());
    std::printf("dfinite=%d self_reversed=%d agree=%d reversal_none=%d unresolved=%d\n",
                rr.dfinite, rr.self_reversed, rr.agree, rr.reversal_none, rr.unresolved);
    return 0;
}

int cmd_guess(const CommonArgs& a, const std::string& gadget, bool json) {
    StepSet s = parse_steps(a);
    Spec spec = resolve_spec(a, s.dim);
    int N = a.terms > 0 ? a.terms : 250;
    Bounds b = default_bounds(s.dim, a.long_run);
    SeriesZ f = expand_counts(s, spec, N);

    bool found = false;
    auto report = [&](const char* name, int order, int degree, const std::string& text) {
        std::printf("%s (%d,%d): %s\n", name, order, degree, text.c_str());
        found = true;
    };
    auto miss = [&](const char* name, const GuessStats& st) {
        std::printf("%s: none%s%s\n", name, st.note.empty() ? "" : ", ", st.note.c_str());
    };

    GuessStats st;
    if (gadget == "rec" || gadget == "all") {
        if (auto R = guess_rec(f.a, gadget_cfg(b, 'r', a), &st))
            report("rec", R->order(), R->degree(), json ? to_json(*R) : to_string(*R));
        else
            miss("rec", st);
    }
    if (gadget == "ode" || gadget == "all") {
        if (auto L = guess_ode(f.a, gadget_cfg(b, 'o', a), &st))
            report("ode", L->order(), L->degree(), json ? to_json(*L) : to_string(*L));
        else
            miss("ode", st);
    }
    if (gadget == "alg" || gadget == "all") {
        if (auto P = guess_algeq(f.a, gadget_cfg(b, 'a', a), &st))
            report("alg", P->ydeg(), P->tdeg(), json ? to_json(*P) : to_string(*P));
        else
            miss("alg", st);
    }
    return found ? 0 : 2;
}

int cmd_certify(const CommonArgs& a) {
    StepSet s = parse_steps(a);
    Spec spec = resolve_spec(a, s.dim);
    int N = a.terms > 0 ? a.terms : 250;
    Bounds b = default_bounds(s.dim, a.long_run);

    SeriesZ f = expand_counts(s, spec, N);
    auto R = guess_rec(f.a, gadget_cfg(b, 'r', a));
    auto L = guess_ode(f.a, gadget_cfg(b, 'o', a));
    auto P = guess_algeq(f.a, gadget_cfg(b, 'a', a));
    if (!R && !L && !P) {
        std::printf("no equation guessed at these bounds\n");
        return 2;
    }

    CertifyContext ctx;
    ctx.series = f.a;
    ctx.extended = expand_counts(s, spec, 2 * N).a;
    ctx.companion_ode = L ? &*L : nullptr;
    if (a.primes > 0) ctx.sieve_primes = a.primes;

    auto line = [&](const char* name, int o, int d, const SieveReport& rep) {
        std::printf("%s (%d,%d): size=%s extension=%s analytic=%s arithmetic=%s overall=%s\n",
                    name, o, d, status_name(rep.size.status), status_name(rep.extension.status),
                    status_name(rep.analytic.status), status_name(rep.arithmetic.status),
                    rep.overall() ? "pass" : "fail");
        for (const auto* v : {&rep.size, &rep.extension, &rep.analytic, &rep.arithmetic})
            if (!v->evidence.empty()) std::printf("    %s\n", v->evidence.c_str());
    };
    bool all_pass = true;
    if (R) {
        SieveReport rep = certify(Guessed(*R), ctx);
        line("rec", R->order(), R->degree(), rep);
        all_pass = all_pass && rep.overall();
    }
    if (L) {
        SieveReport rep = certify(Guessed(*L), ctx);
        line("ode", L->order(), L->degree(), rep);
        all_pass = all_pass && rep.overall();
    }
    if (P) {
        SieveReport rep = certify(Guessed(*P), ctx);
        line("alg", P->ydeg(), P->tdeg(), rep);
        all_pass = all_pass && rep.overall();
    }
    return all_pass ? 0 : 2;
}

int cmd_asympt(const CommonArgs& a, int fit_terms) {
    StepSet s = parse_steps(a);
    Spec spec = resolve_spec(a, s.dim);
    int N = a.terms > 0 ? a.terms : 250;
    Bounds b = default_bounds(s.dim, a.long_run);

    SeriesZ f = expand_counts(s, spec, N);
    auto R = guess_rec(f.a, gadget_cfg(b, 'r', a));
    if (!R) {
        std::printf("no recurrence at these bounds, cannot extend for a fit\n");
        return 2;
    }
    std::vector<Int> far = extend_sequence(*R, f.a, fit_terms);
    double est = estimate_rho(far);
    auto hit = match_rho(char_candidates(*R), est);
    AsymptoticFit fit = hit ? fit_asymptotics(far, *hit) : fit_asymptotics(far, est);

    std::string exact = fit.rho_exact ? "  (exact " + fit.rho_exact->str() + ")" : "";
    std::printf("rho    = %.12g%s\n", fit.rho, exact.c_str());
    std::printf("alpha  = %.12g  (ladder spread %.2g)\n", fit.alpha, fit.alpha_err);
    std::printf("kappa  = %.12g  (%d stable digits)\n", fit.kappa, fit.kappa_stable_digits);
    if (fit.stride != 1) std::printf("stride = %d\n", fit.stride);
    if (fit.beta_residual != 0)
        std::printf("beta   = %g  (residual %.2g)\n", fit.beta, fit.beta_residual);
    if (!fit.note.empty()) std::printf("note: %s\n", fit.note.c_str());
    return 0;
}

int cmd_oracle(const CommonArgs& a, int max_n) {
    Spec spec = resolve_spec(a, a.dim);
    std::vector<StepSet> sets;
    if (!a.steps.empty()) {
        for (const auto& bits : split_csv(a.steps)) sets.push_back(StepSet::from_bits(bits));
    } else {
        if (a.dim != 2)
            throw CLI::ValidationError("full oracle sweeps are 2D only; pass --steps in 3D");
        for (auto& s : enumerate_stepsets(2, 8))
            if (s.size() > 0) sets.push_back(std::move(s));
    }
    long checks = 0, bad = 0;
    for (const auto& s : sets) {
        SeriesZ f = expand_counts(s, spec, max_n + 1);
        for (int n = 0; n <= max_n; ++n) {
            Int want = brute_force_walks(s, spec, n);
            ++checks;
            if (f.a[n] != want) {
                ++bad;
                std::printf("mismatch: steps=%s n=%d dp=%s brute=%s\n", s.bits().c_str(), n,
                            f.a[n].get_str().c_str(), want.get_str().c_str());
            }
        }
    }
    std::printf("sets=%zu checks=%ld mismatches=%ld\n", sets.size(), checks, bad);
    return bad > 0 ? 2 : 0;
}

int cmd_selftest() {
    int passed = 0, total = 0;
    auto check = [&](const char* name, bool ok) {
        ++total;
        passed += ok;
        std::printf("%-34s %s\n", name, ok ? "ok" : "FAIL");
    };

    const Table1Row* krew = table1_find({"01010001"});
    SeriesZ f = expand_counts(StepSet::from_bits("01010001"), spec2(1, 1), 121);
    std::vector<Int> want = parse_terms(
        "1,1,3,7,17,47,125,333,939,2597,7183,20505,57859,163201,469795");
    check("expansion: first 15 terms",
          std::equal(want.begin(), want.end(), f.a.begin()));
    check("oracle: brute matches dp at n=6",
          brute_force_walks(StepSet::from_bits("01010001"), spec2(1, 1), 6) == f.a[6]);
    check("fixture: table rows embedded",
          krew && table1().size() == 36 && table2().size() == 3 && table3().size() == 32);
    check("frozen recurrence annihilates", annihilates(kreweras_rec(), f.a));
    check("frozen operator annihilates", annihilates(kreweras_ode(), f.a));
    check("frozen minimal polynomial annihilates", annihilates(kreweras_algeq(), f.a));
    GuessConfig cfg;
    cfg.max_order = 6;
    cfg.max_degree = 8;
    auto R = guess_rec(std::vector<Int>(f.a.begin(), f.a.begin() + 100), cfg);
    check("guess: recurrence from 100 terms", R && *R == kreweras_rec());

    std::printf("selftest: %d/%d passed\n", passed, total);
    return passed == total ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted lattice walk enumeration and classification"};
    app.set_version_flag("--version", tool_version);
    app.set_config("--config", "", "key=value config file (sections per subcommand)");
    app.require_subcommand(1);

    CommonArgs a;
    std::string out, rows, gadget = "all";
    bool json = false;
    int max_n = 7, fit_terms = 2000;

    auto* expand = app.add_subcommand("expand", "expand the counting series");
    add_common(expand, a, true);
    expand->add_option("--out", out, "write the series cache file here instead of stdout");

    auto* classify = app.add_subcommand("classify", "run a classification campaign");
    add_common(classify, a, false);

    auto* check = app.add_subcommand("check-tables", "diff a database against the embedded tables");
    add_common(check, a, false);
    check->add_option("--rows", rows, "restrict to these tags or bitstrings, comma separated");

    auto* reversal = app.add_subcommand("reversal-report", "arrow reversal consistency over a database");
    add_common(reversal, a, false);

    auto* guess = app.add_subcommand("guess", "guess annihilating equations for one step set");
    add_common(guess, a, true);
    guess->add_option("--gadget", gadget, "rec, ode, alg or all")
        ->check(CLI::IsMember({"rec", "ode", "alg", "all"}));
    guess->add_flag("--json", json, "print payloads as JSON");

    auto* certify = app.add_subcommand("certify", "guess, then run the four sieves");
    add_common(certify, a, true);

    auto* asympt = app.add_subcommand("asympt", "fit kappa * rho^n * n^alpha for one step set");
    add_common(asympt, a, true);
    asympt->add_option("--fit-terms", fit_terms, "extension length for the fit");

    auto* oracle = app.add_subcommand("oracle", "brute force versus dynamic programming");
    add_common(oracle, a, false);
    oracle->add_option("--max-n", max_n, "largest walk length checked")->check(CLI::Range(0, 12));

    auto* selftest = app.add_subcommand("selftest", "built-in smoke checks");

    // lets --config sit after the subcommand name
    for (auto* sc : {expand, classify, check, reversal, guess, certify, asympt, oracle, selftest})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (expand->parsed()) return cmd_expand(a, out);
        if (classify->parsed()) return cmd_classify(a);
        if (check->parsed()) return cmd_check_tables(a, rows);
        if (reversal->parsed()) return cmd_reversal(a);
        if (guess->parsed()) return cmd_guess(a, gadget, json);
        if (certify->parsed()) return cmd_certify(a);
        if (asympt->parsed()) return cmd_asympt(a, fit_terms);
        if (oracle->parsed()) return cmd_oracle(a, max_n);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
