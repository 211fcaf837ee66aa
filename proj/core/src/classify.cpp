#include "walkclass/classify.hpp"

#include "walkclass/fixtures.hpp"

#include "json.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace walkclass {

using json = nlohmann::ordered_json;

namespace {

std::string now_utc() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string cfg_sig(const char* name, const GuessConfig& c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s(%d,%d,%d)", name, c.max_order, c.max_degree, c.margin);
    return buf;
}

Rat rat_of(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

SeriesZ cached_expand(const StepSet& s, const Spec& spec, int N, const std::string& dir) {
    if (dir.empty()) return expand_counts(s, spec, N);
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + series_cache_name(s, spec, N);
    if (auto hit = read_series_file(path, s, spec, N)) return *hit;
    SeriesZ out = expand_counts(s, spec, N);
    write_series_file(path, s, spec, out);
    return out;
}

std::string fixture_tag(int dim, const std::vector<std::string>& members) {
    if (dim == 2) {
        const Table1Row* row = table1_find(members);
        return row ? row->tag : "";
    }
    for (const auto& row : table2())
        for (const auto& b : members)
            if (b == row.bits1 || b == row.bits2) return row.tag;
    for (const auto& row : table3())
        for (const auto& b : members)
            for (const auto& rb : row.bits)
                if (b == rb) return row.tag;
    for (const auto& sp : spot_sequences())
        for (const auto& b : members)
            if (b == sp.bits) return sp.tag;
    return "";
}

void append_note(std::string& note, const std::string& extra) {
    if (extra.empty()) return;
    if (!note.empty()) note += "; ";
    note += extra;
}

json shape_json(const Shape& s) {
    if (!s.present()) return nullptr;
    return json::array({s.order, s.degree});
}

Shape shape_from(const json& j) {
    if (j.is_null()) return {};
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

json verdict_json(const Verdict& v) {
    return json{{"status", status_name(v.status)}, {"evidence", v.evidence}};
}

Status status_from(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "inconclusive") return Status::inconclusive;
    throw std::invalid_argument("unknown sieve status " + s);
}

Verdict verdict_from(const json& j) {
    Verdict v;
    v.status = status_from(j.at("status").get<std::string>());
    v.evidence = j.at("evidence").get<std::string>();
    return v;
}

json fit_json(const AsymptoticFit& f) {
    json j;
    if (f.rho_exact)
        j["rho_exact"] = {{"a", f.rho_exact->a.get_str()},
                          {"b", f.rho_exact->b.get_str()},
                          {"c", f.rho_exact->c.get_str()}};
    else
        j["rho_exact"] = nullptr;
    j["rho"] = f.rho;
    j["alpha"] = f.alpha;
    j["alpha_err"] = f.alpha_err;
    j["kappa"] = f.kappa;
    j["kappa_stable_digits"] = f.kappa_stable_digits;
    j["beta"] = f.beta;
    j["beta_residual"] = f.beta_residual;
    j["stride"] = f.stride;
    j["note"] = f.note;
    return j;
}

AsymptoticFit fit_from(const json& j) {
    AsymptoticFit f;
    if (!j.at("rho_exact").is_null()) {
        const json& s = j.at("rho_exact");
        f.rho_exact = SurdQ{rat_of(s.at("a").get<std::string>()),
                            rat_of(s.at("b").get<std::string>()),
                            Int(s.at("c").get<std::string>())};
    }
    f.rho = j.at("rho").get<double>();
    f.alpha = j.at("alpha").get<double>();
    f.alpha_err = j.at("alpha_err").get<double>();
    f.kappa = j.at("kappa").get<double>();
    f.kappa_stable_digits = j.at("kappa_stable_digits").get<int>();
    f.beta = j.at("beta").get<double>();
    f.beta_residual = j.at("beta_residual").get<double>();
    f.stride = j.at("stride").get<int>();
    f.note = j.at("note").get<std::string>();
    return f;
}

Shape shape_of(const RecOp& R) { return {R.order(), R.degree()}; }
Shape shape_of(const DiffOp& L) { return {L.order(), L.degree()}; }
Shape shape_of(const AlgEq& P) { return {P.ydeg(), P.tdeg()}; }

std::string campaign_key(const std::string& bits, int dim, const std::string& spec, int N,
                         const std::string& bounds, const std::string& version) {
    return bits + "|" + std::to_string(dim) + "|" + spec + "|" + std::to_string(N) + "|" +
           bounds + "|" + version;
}

} // namespace

std::string Bounds::signature() const {
    return cfg_sig("rec", rec) + " " + cfg_sig("ode", ode) + " " + cfg_sig("alg", alg);
}

Bounds default_bounds(int dim, bool long_run) {
    Bounds b;
    if (dim == 2) {
        b.rec.max_order = 10;
        b.rec.max_degree = 20;
        b.ode.max_order = 6;
        b.ode.max_degree = 24;
        b.alg.max_order = 12;
        b.alg.max_degree = 20;
    } else if (long_run) {
        b.rec.max_order = 14;
        b.rec.max_degree = 70;
        b.ode.max_order = 10;
        b.ode.max_degree = 75;
        b.alg.max_order = 12;
        b.alg.max_degree = 20;
    } else {
        b.rec.max_order = 10;
        b.rec.max_degree = 30;
        b.ode.max_order = 6;
        b.ode.max_degree = 30;
        b.alg.max_order = 12;
        b.alg.max_degree = 20;
    }
    return b;
}

std::string ClassificationRecord::key() const {
    return campaign_key(bits, dim, spec, N, bounds, version);
}

std::string to_json_line(const ClassificationRecord& r) {
    json j;
    j["bits"] = r.bits;
    j["dim"] = r.dim;
    j["rep"] = r.rep;
    j["members"] = r.members;
    j["spec"] = r.spec;
    j["N"] = r.N;
    j["bounds"] = r.bounds;
    j["verdict"] = r.verdict;
    j["shapes"] = {{"rec", shape_json(r.rec_shape)},
                   {"ode", shape_json(r.ode_shape)},
                   {"alg", shape_json(r.alg_shape)}};
    j["payloads"] = {{"rec", r.rec ? json::parse(to_json(*r.rec)) : json(nullptr)},
                     {"ode", r.ode ? json::parse(to_json(*r.ode)) : json(nullptr)},
                     {"alg", r.alg ? json::parse(to_json(*r.alg)) : json(nullptr)}};
    j["sieves"] = {{"size", verdict_json(r.sieves.size)},
                   {"extension", verdict_json(r.sieves.extension)},
                   {"analytic", verdict_json(r.sieves.analytic)},
                   {"arithmetic", verdict_json(r.sieves.arithmetic)}};
    j["fit"] = r.fit ? fit_json(*r.fit) : json(nullptr);
    j["oeis"] = r.oeis;
    j["note"] = r.note;
    j["created"] = r.created;
    j["version"] = r.version;
    return j.dump();
}

ClassificationRecord record_from_json(const std::string& line) {
    const json j = json::parse(line);
    ClassificationRecord r;
    r.bits = j.at("bits").get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.rep = j.at("rep").get<bool>();
    r.members = j.at("members").get<std::vector<std::string>>();
    r.spec = j.at("spec").get<std::string>();
    r.N = j.at("N").get<int>();
    r.bounds = j.at("bounds").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.rec_shape = shape_from(j.at("shapes").at("rec"));
    r.ode_shape = shape_from(j.at("shapes").at("ode"));
    r.alg_shape = shape_from(j.at("shapes").at("alg"));
    if (!j.at("payloads").at("rec").is_null())
        r.rec = recop_from_json(j.at("payloads").at("rec").dump());
    if (!j.at("payloads").at("ode").is_null())
        r.ode = diffop_from_json(j.at("payloads").at("ode").dump());
    if (!j.at("payloads").at("alg").is_null())
        r.alg = algeq_from_json(j.at("payloads").at("alg").dump());
    r.sieves.size = verdict_from(j.at("sieves").at("size"));
    r.sieves.extension = verdict_from(j.at("sieves").at("extension"));
    r.sieves.analytic = verdict_from(j.at("sieves").at("analytic"));
    r.sieves.arithmetic = verdict_from(j.at("sieves").at("arithmetic"));
    if (!j.at("fit").is_null()) r.fit = fit_from(j.at("fit"));
    r.oeis = j.at("oeis").get<std::string>();
    r.note = j.at("note").get<std::string>();
    r.created = j.at("created").get<std::string>();
    r.version = j.at("version").get<std::string>();
    return r;
}

std::vector<ClassificationRecord> read_db(const std::string& path) {
    std::vector<ClassificationRecord> out;
    std::ifstream f(path, std::ios::binary);
    if (!f) return out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        out.push_back(record_from_json(line));
    }
    return out;
}

void append_record(const std::string& path, const ClassificationRecord& r) {
    std::ofstream f(path, std::ios::binary | std::ios::app);
    if (!f) throw std::runtime_error("cannot append to " + path);
    f << to_json_line(r) << "\n";
    if (!f) throw std::runtime_error("short write to " + path);
}

ClassificationRecord classify_class(const StepSet& rep,
                                    const std::vector<std::string>& members,
                                    const ClassifyOptions& opt) {
    ClassificationRecord r;
    r.bits = rep.bits();
    r.members = members.empty() ? std::vector<std::string>{r.bits} : members;
    r.dim = rep.dim;
    r.spec = spec_csv(opt.spec, rep.dim);
    r.N = opt.N;
    r.bounds = opt.bounds.signature();
    r.created = now_utc();
    r.oeis = fixture_tag(rep.dim, r.members);
    try {
        const SeriesZ s = cached_expand(rep, opt.spec, opt.N, opt.cache_dir);
        GuessStats st_rec, st_ode, st_alg;
        r.rec = guess_rec(s.a, opt.bounds.rec, &st_rec);
        r.ode = guess_ode(s.a, opt.bounds.ode, &st_ode);
        r.alg = guess_algeq(s.a, opt.bounds.alg, &st_alg);
        if (r.rec) r.rec_shape = shape_of(*r.rec);
        if (r.ode) r.ode_shape = shape_of(*r.ode);
        if (r.alg) r.alg_shape = shape_of(*r.alg);
        if (!r.rec && !r.ode && !r.alg) {
            r.verdict = "none-found";
            append_note(r.note, "rec: " + st_rec.note);
            append_note(r.note, "ode: " + st_ode.note);
            append_note(r.note, "alg: " + st_alg.note);
            return r;
        }

        const SeriesZ ext = cached_expand(rep, opt.spec, 2 * opt.N, opt.cache_dir);
        CertifyContext ctx;
        ctx.series = s.a;
        ctx.extended = ext.a;
        ctx.companion_ode = r.ode ? &*r.ode : nullptr;
        ctx.sieve_primes = opt.sieve_primes;
        if (r.alg) {
            r.sieves = certify(Guessed(*r.alg), ctx);
            if (r.sieves.overall()) r.verdict = "algebraic";
        }
        if (r.verdict.empty() && (r.ode || r.rec)) {
            const SieveReport alt =
                r.ode ? certify(Guessed(*r.ode), ctx) : certify(Guessed(*r.rec), ctx);
            if (!r.alg || alt.overall()) r.sieves = alt;
            if (alt.overall()) r.verdict = "D-finite-transcendental-candidate";
        }
        if (r.verdict.empty()) {
            r.verdict = "none-found";
            append_note(r.note, "guessed equations failed certification");
            return r;
        }

        if (r.rec) {
            try {
                const std::vector<Int> far = extend_sequence(*r.rec, s.a, opt.fit_terms);
                const double est = estimate_rho(far);
                std::optional<SurdQ> hit;
                if (!std::isnan(est)) hit = match_rho(char_candidates(*r.rec), est);
                r.fit = hit ? fit_asymptotics(far, *hit) : fit_asymptotics(far, est);
            } catch (const std::exception& e) {
                append_note(r.note, std::string("fit: ") + e.what());
            }
        } else {
            append_note(r.note, "no recurrence; asymptotics skipped");
        }
    } catch (const std::exception& e) {
        r.verdict = "none-found";
        append_note(r.note, std::string("error: ") + e.what());
    }
    return r;
}

CampaignSummary run_campaign(const ClassifyOptions& opt,
                             std::vector<ClassificationRecord>* records) {
    if (opt.dim != 2 && opt.dim != 3)
        throw std::invalid_argument("dim must be 2 or 3");
    if (opt.dim == 3 && opt.only_bits.empty() && !opt.long_run)
        throw std::invalid_argument("full 3D enumeration needs the long-run flag");
    if (opt.N < 10) throw std::invalid_argument("N too small to classify anything");

    std::vector<StepSet> sets;
    if (!opt.only_bits.empty()) {
        for (const auto& b : opt.only_bits) {
            StepSet s = StepSet::from_bits(b);
            if (s.dim != opt.dim)
                throw std::invalid_argument("step set " + b + " is not " +
                                            std::to_string(opt.dim) + "D");
            if (s.steps.empty()) throw std::invalid_argument("empty step set");
            sets.push_back(std::move(s));
        }
    } else {
        for (auto& s : enumerate_stepsets(opt.dim, opt.dim == 2 ? 8 : 26))
            if (!s.steps.empty()) sets.push_back(std::move(s));
    }

    const auto classes = dedupe_by_prefix(sets, opt.prefix_len, opt.spec);

    std::unordered_map<std::string, const ClassificationRecord*> existing;
    std::vector<ClassificationRecord> old;
    if (!opt.db_path.empty()) {
        old = read_db(opt.db_path);
        for (const auto& r : old) existing[r.key()] = &r;
    }

    CampaignSummary sum;
    struct Slot {
        const DedupeClass* cls = nullptr;
        const ClassificationRecord* reused = nullptr;
        ClassificationRecord fresh;
    };
    std::vector<Slot> slots;
    for (const auto& cls : classes) {
        if (cls.degenerate) {
            ++sum.degenerate;
            continue;
        }
        ++sum.classes;
        Slot slot;
        slot.cls = &cls;
        const std::string key = campaign_key(cls.rep.bits(), opt.dim,
                                             spec_csv(opt.spec, opt.dim), opt.N,
                                             opt.bounds.signature(), tool_version);
        if (auto it = existing.find(key); it != existing.end()) {
            slot.reused = it->second;
            ++sum.reused;
        }
        slots.push_back(std::move(slot));
    }

    std::vector<size_t> todo;
    for (size_t i = 0; i < slots.size(); ++i)
        if (!slots[i].reused) todo.push_back(i);

    const int jobs = std::max(1, opt.jobs);
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const size_t k = cursor.fetch_add(1);
            if (k >= todo.size()) break;
            Slot& slot = slots[todo[k]];
            std::vector<std::string> members;
            for (const auto& m : slot.cls->members) members.push_back(m.bits());
            slot.fresh = classify_class(slot.cls->rep, members, opt);
        }
    };
    if (jobs == 1 || todo.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }

    for (Slot& slot : slots) {
        const ClassificationRecord& r = slot.reused ? *slot.reused : slot.fresh;
        if (!slot.reused && !opt.db_path.empty()) append_record(opt.db_path, r);
        if (r.verdict == "algebraic") {
            ++sum.algebraic;
            ++sum.dfinite;
        } else if (r.verdict == "D-finite-transcendental-candidate") {
            ++sum.dfinite;
        } else {
            ++sum.none;
        }
        if (r.note.rfind("error: ", 0) == 0) ++sum.failures;
        if (records) records->push_back(r);
    }
    return sum;
}

namespace {

// Re-expansion length for payload verification: enough terms that every
// stored equation is checked at dozens of indices past its own footprint.
int recheck_terms(const ClassificationRecord& r) {
    int n = 80;
    if (r.rec_shape.present()) n = std::max(n, 2 * (r.rec_shape.order + r.rec_shape.degree) + 40);
    if (r.ode_shape.present()) n = std::max(n, 2 * (r.ode_shape.order + r.ode_shape.degree) + 40);
    if (r.alg_shape.present()) n = std::max(n, 2 * (r.alg_shape.order + r.alg_shape.degree) + 40);
    return n;
}

struct RowSpec {
    std::string tag;
    std::vector<std::string> bits; // any member identifies the class
    Shape rec, ode, alg;
    bool algebraic = false;
    const Table1Row* t1 = nullptr; // asymptotics, 2D only
};

} // namespace

TableCheck check_tables(const std::vector<ClassificationRecord>& db, int dim,
                        const std::vector<std::string>& only_rows) {
    TableCheck out;
    auto considered = [&](const RowSpec& row) {
        if (only_rows.empty()) return true;
        for (const auto& key : only_rows) {
            if (key == row.tag) return true;
            for (const auto& b : row.bits)
                if (key == b) return true;
        }
        return false;
    };
    auto mismatch = [&](const std::string& line) {
        ++out.mismatches;
        out.details.push_back(line);
    };

    std::unordered_map<std::string, const ClassificationRecord*> by_member;
    for (const auto& r : db) {
        if (r.dim != dim) continue;
        for (const auto& m : r.members) by_member[m] = &r;
    }

    std::vector<RowSpec> rows;
    if (dim == 2) {
        for (const auto& t : table1()) {
            RowSpec row;
            row.tag = t.tag;
            row.bits = {t.bits};
            row.rec = {t.rec_r, t.rec_d};
            row.ode = {t.ode_r, t.ode_d};
            if (t.alg_y > 0) {
                row.alg = {t.alg_y, t.alg_t};
                row.algebraic = true;
            }
            row.t1 = &t;
            rows.push_back(std::move(row));
        }
    } else {
        for (const auto& t : table2()) {
            RowSpec row;
            row.tag = t.tag;
            row.bits = {t.bits1, t.bits2};
            row.rec = {t.rec_r, t.rec_d};
            row.ode = {t.ode_r, t.ode_d};
            row.alg = {t.alg_y, t.alg_t};
            row.algebraic = true;
            rows.push_back(std::move(row));
        }
        for (const auto& t : table3()) {
            RowSpec row;
            row.tag = t.tag;
            row.bits = t.bits;
            row.rec = {t.rec_r, t.rec_d};
            row.ode = {t.ode_r, t.ode_d};
            rows.push_back(std::move(row));
        }
    }

    for (const auto& row : rows) {
        if (!considered(row)) continue;
        const ClassificationRecord* rec = nullptr;
        for (const auto& b : row.bits)
            if (auto it = by_member.find(b); it != by_member.end()) {
                rec = it->second;
                break;
            }
        if (!rec) {
            mismatch(row.tag + ": missing from database");
            continue;
        }
        ++out.rows_compared;
        if (rec->rec_shape != row.rec)
            mismatch(row.tag + ": recurrence shape differs");
        if (rec->ode_shape != row.ode)
            mismatch(row.tag + ": differential shape differs");
        if (row.algebraic) {
            if (rec->alg_shape != row.alg)
                mismatch(row.tag + ": algebraic shape differs");
            if (rec->verdict != "algebraic")
                mismatch(row.tag + ": verdict is " + rec->verdict + ", not algebraic");
        } else {
            if (rec->alg_shape.present())
                mismatch(row.tag + ": unexpected algebraic equation");
            if (rec->verdict != "D-finite-transcendental-candidate")
                mismatch(row.tag + ": verdict is " + rec->verdict);
        }

        const StepSet s = StepSet::from_bits(rec->bits);
        const SeriesZ fresh = expand_counts(s, parse_spec(rec->spec, rec->dim),
                                            recheck_terms(*rec));
        if (rec->rec && !annihilates(*rec->rec, fresh.a))
            mismatch(row.tag + ": stored recurrence fails on fresh series");
        if (rec->ode && !annihilates(*rec->ode, fresh.a))
            mismatch(row.tag + ": stored ODE fails on fresh series");
        if (rec->alg && !annihilates(*rec->alg, fresh.a))
            mismatch(row.tag + ": stored algebraic equation fails on fresh series");

        if (row.t1) {
            if (!rec->fit) {
                mismatch(row.tag + ": no asymptotic fit stored");
            } else {
                const SurdQ want = table1_rho(*row.t1);
                if (!rec->fit->rho_exact)
                    mismatch(row.tag + ": growth rate not matched to an exact candidate");
                else if (!(*rec->fit->rho_exact == want))
                    mismatch(row.tag + ": growth rate " + rec->fit->rho_exact->str() +
                             " differs from " + want.str());
                const Rat alpha = rat_of(row.t1->alpha);
                if (std::fabs(rec->fit->alpha - alpha.get_d()) > 1e-3)
                    mismatch(row.tag + ": exponent differs");
                if (!verify_constant(BigFloat(rec->fit->kappa, 64), row.t1->kappa, 1e-4))
                    mismatch(row.tag + ": constant differs from closed form");
            }
        }
    }

    if (dim == 2) {
        for (const auto& r : db) {
            if (r.dim != 2) continue;
            const bool has_eq =
                r.rec_shape.present() || r.ode_shape.present() || r.alg_shape.present();
            if (has_eq && !table1_find(r.members))
                mismatch(r.bits + ": equation found for a class outside the table");
        }
    }
    return out;
}

ReversalReport reversal_report(const std::vector<ClassificationRecord>& db) {
    ReversalReport out;
    std::unordered_map<std::string, const ClassificationRecord*> by_member;
    for (const auto& r : db)
        for (const auto& m : r.members) by_member[m] = &r;

    auto has_eq = [](const ClassificationRecord& r) {
        return r.rec_shape.present() || r.ode_shape.present() || r.alg_shape.present();
    };
    for (const auto& r : db) {
        if (!has_eq(r)) continue;
        ++out.dfinite;
        const std::string rb = reverse_steps(StepSet::from_bits(r.bits)).bits();
        bool self = false;
        for (const auto& m : r.members)
            if (m == rb) self = true;
        if (self) {
            ++out.self_reversed;
            ++out.agree;
            continue;
        }
        auto it = by_member.find(rb);
        if (it == by_member.end()) {
            ++out.unresolved;
            out.details.push_back(r.bits + ": reversal " + rb + " not in database");
        } else if (has_eq(*it->second)) {
            ++out.agree;
        } else {
            ++out.reversal_none;
            out.details.push_back(r.bits + ": reversal " + rb + " has no equation");
        }
    }
    return out;
}

} // namespace walkclass
