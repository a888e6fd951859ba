#include <doctest.h>

#include "corpus.hpp"
#include "jelonek/pipeline.hpp"

using namespace jelonek;

TEST_CASE("worked run: automorphism (x + y^2, y)") {
    Json input = {{"P", "x + y^2"}, {"Q", "y"}};
    RunReport rep = run_pipeline(input, {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.doc["status"] == "ok");
    CHECK(rep.doc["normalize"]["jacobian_constant"] == "1");
    CHECK(rep.doc["resultant"]["A_f_empty"] == true);
    CHECK(rep.doc["dicritical"]["components"].empty());
    bool theorem_vacuous = false;
    for (const auto& c : rep.doc["checks"])
        if (c["name"] == "theorem1" && c["status"] == "VACUOUS") theorem_vacuous = true;
    CHECK(theorem_vacuous);
}

TEST_CASE("worked run: (x, x*y)") {
    Json input = {{"P", "x"}, {"Q", "x*y"}};
    RunReport rep = run_pipeline(input, {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.doc["normalize"]["lambda"] == 1);
    CHECK(rep.doc["normalize"]["jacobian_constant"].is_null());
    CHECK(rep.doc["resultant"]["R0"] == "-u");
    REQUIRE(rep.doc["dicritical"]["components"].size() == 1);
    const auto& comp = rep.doc["dicritical"]["components"][0];
    CHECK(comp["f_phi"][0]["degree"] == -1);
    CHECK(comp["f_phi"][1]["text"] == "-xi");
    for (const auto& c : rep.doc["checks"])
        if (c["name"] == "cross_validation") CHECK(c["status"] == "PASS");
}

TEST_CASE("non-dominant input exits with code 2") {
    Json input = {{"P", "x"}, {"Q", "x"}};
    RunReport rep = run_pipeline(input, {});
    CHECK(rep.exit_code == 2);
    CHECK(rep.doc["status"] == "input_error");
}

TEST_CASE("reports are byte-identical across runs") {
    Json input = {{"P", "x + x^2*y^2"}, {"Q", "x*y"}};
    RunConfig cfg;
    cfg.seed = 42;
    std::string a = run_pipeline(input, cfg).doc.dump();
    std::string b = run_pipeline(input, cfg).doc.dump();
    CHECK(a == b);
}

TEST_CASE("stage isolation: dropping dicritical leaves resultant output unchanged") {
    Json input = {{"P", "x"}, {"Q", "x*y"}};
    RunConfig full;
    RunConfig partial;
    partial.stages = {"normalize", "resultant"};
    Json a = run_pipeline(input, full).doc;
    Json b = run_pipeline(input, partial).doc;
    CHECK(a["resultant"].dump() == b["resultant"].dump());
    CHECK(!b.contains("dicritical"));
}

TEST_CASE("custom variable names") {
    Json input = {{"P", "s + t^2"}, {"Q", "t"}, {"vars", {"s", "t"}}};
    RunReport rep = run_pipeline(input, {});
    CHECK(rep.exit_code == 0);
    CHECK(rep.doc["resultant"]["A_f_empty"] == true);
}

TEST_CASE("ball mode still resolves the worked example") {
    Json input = {{"P", "x"}, {"Q", "x*y"}};
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::ball;
    RunReport rep = run_pipeline(input, cfg);
    CHECK(rep.exit_code == 0);
    REQUIRE(rep.doc["dicritical"]["components"].size() == 1);
}

TEST_CASE("hand-verified corpus images") {
    SUBCASE("(x + x^2 y^2, x y) sweeps the parabola u = v^2") {
        Json input = {{"P", "x + x^2*y^2"}, {"Q", "x*y"}};
        RunReport rep = run_pipeline(input, {});
        CHECK(rep.exit_code == 0);
        REQUIRE(rep.doc["dicritical"]["components"].size() == 1);
        CHECK(rep.doc["resultant"]["N"] == 1);
        for (const auto& c : rep.doc["checks"])
            if (c["name"] == "cross_validation") CHECK(c["status"] == "PASS");
    }
    SUBCASE("(x^2 y, x y) has the two coordinate axes") {
        Json input = {{"P", "x^2*y"}, {"Q", "x*y"}};
        RunReport rep = run_pipeline(input, {});
        CHECK(rep.exit_code == 0);
        CHECK(rep.doc["dicritical"]["components"].size() == 2);
        for (const auto& c : rep.doc["checks"]) {
            if (c["name"] == "cross_validation") CHECK(c["status"] == "PASS");
            if (c["name"] == "lemma2_ledger") CHECK(c["status"] == "PASS");
        }
    }
}

TEST_CASE("whole corpus runs clean") {
    for (const auto& e : corpus::all_maps()) {
        CAPTURE(e.name);
        Json input = {{"P", e.P}, {"Q", e.Q}};
        RunReport rep = run_pipeline(input, {});
        CHECK(rep.exit_code == 0);
        bool has_components = !rep.doc["dicritical"]["components"].empty();
        CHECK(has_components == e.nonempty);
        bool jconst = !rep.doc["normalize"]["jacobian_constant"].is_null();
        CHECK(jconst == e.constant_jacobian);
        CHECK(rep.doc["resultant"]["A_f_empty"] == !e.nonempty);
    }
}
