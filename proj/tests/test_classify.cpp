#include "doctest.h"

#include "walkclass/classify.hpp"
#include "walkclass/fixtures.hpp"

#include <filesystem>
#include <fstream>

using namespace walkclass;
namespace fs = std::filesystem;

namespace {

fs::path workdir() {
    fs::path d = fs::temp_directory_path() / "walkclass-test-classify";
    fs::create_directories(d);
    return d;
}

ClassifyOptions base_options(const std::string& db_name) {
    ClassifyOptions opt;
    opt.db_path = (workdir() / db_name).string();
    opt.cache_dir = (workdir() / "cache").string();
    fs::remove(opt.db_path);
    return opt;
}

std::string strip_timestamps(const std::string& path) {
    std::ifstream in(path);
    std::string out, line;
    while (std::getline(in, line)) {
        auto pos = line.find("\"created\":");
        if (pos != std::string::npos) {
            auto end = line.find(',', pos);
            line.erase(pos, end - pos + 1);
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace

TEST_CASE("bounds signatures and defaults") {
    Bounds b2 = default_bounds(2, false);
    CHECK(b2.ode.max_order == 6);
    CHECK(b2.ode.max_degree == 24);
    CHECK_FALSE(b2.signature().empty());
    Bounds b3 = default_bounds(3, true);
    CHECK(b3.ode.max_degree == 75);
    CHECK(b2.signature() != b3.signature());
}

TEST_CASE("fixture lookup") {
    const Table1Row* row = table1_find({"01010001"});
    REQUIRE(row != nullptr);
    CHECK(std::string(row->tag) == "A151265");
    CHECK(table1_find({"11111110"}) == nullptr);
    CHECK(table1().size() == 36);
    CHECK(table2().size() == 3);
    CHECK(table3().size() == 32);
}

TEST_CASE("classification record JSON round-trip") {
    ClassifyOptions opt = base_options("roundtrip.db");
    opt.only_bits = {"01010001"};
    std::vector<ClassificationRecord> recs;
    CampaignSummary sum = run_campaign(opt, &recs);
    CHECK(sum.classes == 1);
    CHECK(sum.algebraic == 1);
    CHECK(sum.failures == 0);
    REQUIRE(recs.size() == 1);

    const ClassificationRecord& r = recs[0];
    CHECK(r.verdict == "algebraic");
    CHECK(r.oeis == "A151265");
    CHECK(r.rec_shape == Shape{6, 4});
    CHECK(r.ode_shape == Shape{4, 9});
    CHECK(r.alg_shape == Shape{6, 8});
    REQUIRE(r.rec.has_value());
    CHECK(*r.rec == kreweras_rec());
    REQUIRE(r.ode.has_value());
    CHECK(*r.ode == kreweras_ode());
    REQUIRE(r.alg.has_value());
    CHECK(*r.alg == kreweras_algeq());
    CHECK(r.sieves.overall());
    REQUIRE(r.fit.has_value());
    CHECK(r.fit->rho_exact == SurdQ{Rat(3), Rat(0), Int(1)});

    std::string line = to_json_line(r);
    ClassificationRecord back = record_from_json(line);
    CHECK(to_json_line(back) == line);
    CHECK(back.key() == r.key());

    auto db = read_db(opt.db_path);
    REQUIRE(db.size() == 1);
    CHECK(to_json_line(db[0]) == line);
}

TEST_CASE("campaign idempotence and determinism") {
    ClassifyOptions opt = base_options("determinism-a.db");
    opt.only_bits = {"00000011", "00000001", "00000101"}; // three cheap classes
    CampaignSummary first = run_campaign(opt, nullptr);
    CHECK(first.classes == 3);
    CHECK(first.reused == 0);
    CHECK(first.failures == 0);

    // re-run: everything keyed out, nothing appended
    CampaignSummary again = run_campaign(opt, nullptr);
    CHECK(again.reused == 3);
    auto db = read_db(opt.db_path);
    CHECK(db.size() == 3);

    // a fresh database with the same config matches byte for byte modulo timestamps
    ClassifyOptions opt2 = base_options("determinism-b.db");
    opt2.only_bits = opt.only_bits;
    run_campaign(opt2, nullptr);
    CHECK(strip_timestamps(opt.db_path) == strip_timestamps(opt2.db_path));

    // parallel scheduling keeps the record order and content
    ClassifyOptions opt4 = base_options("determinism-c.db");
    opt4.only_bits = opt.only_bits;
    opt4.jobs = 4;
    run_campaign(opt4, nullptr);
    CHECK(strip_timestamps(opt4.db_path) == strip_timestamps(opt.db_path));
}

TEST_CASE("campaign option validation") {
    ClassifyOptions opt = base_options("invalid.db");
    opt.dim = 4;
    CHECK_THROWS_AS(run_campaign(opt, nullptr), std::invalid_argument);
    opt.dim = 3; // full 3D enumeration is gated
    opt.long_run = false;
    opt.only_bits.clear();
    CHECK_THROWS_AS(run_campaign(opt, nullptr), std::invalid_argument);
    opt.dim = 2;
    opt.N = 5;
    CHECK_THROWS_AS(run_campaign(opt, nullptr), std::invalid_argument);
    opt.N = 250;
    opt.only_bits = {"00000100000010010010000000"}; // 3D bits under dim 2
    CHECK_THROWS_AS(run_campaign(opt, nullptr), std::invalid_argument);
}

TEST_CASE("table checks over restricted databases") {
    ClassifyOptions opt = base_options("tables.db");
    opt.only_bits = {"01010001"};
    run_campaign(opt, nullptr);
    auto db = read_db(opt.db_path);

    TableCheck one = check_tables(db, 2, {"A151265"});
    CHECK(one.rows_compared == 1);
    CHECK(one.mismatches == 0);

    TableCheck empty = check_tables({}, 2);
    CHECK(empty.rows_compared == 0);
    CHECK(empty.mismatches == 36);

    // a record with a tampered verdict trips the comparison
    auto bad = db;
    bad[0].verdict = "D-finite-transcendental-candidate";
    TableCheck tampered = check_tables(bad, 2, {"A151265"});
    CHECK(tampered.mismatches > 0);
}

TEST_CASE("reversal bookkeeping") {
    ClassifyOptions opt = base_options("reversal.db");
    opt.only_bits = {"01010001", "10001010", "10100101"};
    run_campaign(opt, nullptr);
    auto db = read_db(opt.db_path);
    REQUIRE(db.size() == 3);

    ReversalReport rr = reversal_report(db);
    CHECK(rr.dfinite == 3);
    CHECK(rr.self_reversed == 1); // the diagonal model
    CHECK(rr.agree == 3);         // Kreweras and its reversal resolve each other
    CHECK(rr.reversal_none == 0);
    CHECK(rr.unresolved == 0);
}

TEST_CASE("degenerate classes are recorded but not guessed") {
    ClassifyOptions opt = base_options("degenerate.db");
    opt.only_bits = {"10000000"}; // single SW step: stuck at the origin
    std::vector<ClassificationRecord> recs;
    CampaignSummary sum = run_campaign(opt, &recs);
    CHECK(sum.degenerate == 1);
    CHECK(sum.classes == 0);
    CHECK(recs.empty());
}
