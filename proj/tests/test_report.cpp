#include <doctest.h>

#include <sstream>

#include "fqdigraph/report.hpp"

using namespace fqdigraph;

namespace {

std::vector<std::vector<elem_t>> example_f25_rows() {
    const elem_t T[3][3] = {{0, 5, 1}, {5, 10, 5}, {2, 5, 0}};
    std::vector<std::vector<elem_t>> rows;
    auto cls = [](elem_t t) { return t == 0 ? 0 : (t == 1 ? 1 : 2); };
    for (elem_t x = 0; x < 25; ++x) {
        for (elem_t y = 0; y < 25; ++y) rows.push_back({T[cls(y)][cls(x)]});
    }
    return rows;
}

ComponentStructure example_structure() {
    FieldCtx F(5, 2, std::vector<coeff_t>{2, 4, 1});
    return analyze(F, make_table_funcspec(F, example_f25_rows()));
}

template <class R>
std::string emitted(const R& r, ReportFormat fmt) {
    std::ostringstream os;
    emit_report(r, fmt, os);
    return os.str();
}

}  // namespace

TEST_CASE("format names parse exactly") {
    CHECK(parse_format("json") == ReportFormat::Json);
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK(parse_format("text") == ReportFormat::Text);
    CHECK_THROWS_AS(parse_format("yaml"), SchemaError);
    CHECK_THROWS_AS(parse_format("JSON"), SchemaError);
}

TEST_CASE("component report emission") {
    ComponentStructure s = example_structure();

    SUBCASE("json fields") {
        nlohmann::json j = report_json(s);
        CHECK(j["parity"] == "odd");
        CHECK(j["d"] == 1);
        CHECK(j["el"] == 2);
        CHECK(j["count"] == 3);
        CHECK(j["strong"] == false);
        CHECK(j["f00_in_W0"] == true);
        CHECK(j["orders"] == nlohmann::json({125, 250, 250}));
        CHECK(j["W0_basis"] == nlohmann::json({{1, 0}}));
        CHECK(j["W_basis"] == nlohmann::json({{1, 0}}));
    }
    SUBCASE("csv flattens count and orders") {
        CHECK(emitted(s, ReportFormat::Csv) == "3,125;250;250\n");
    }
    SUBCASE("text leads with strongness") {
        std::string t = emitted(s, ReportFormat::Text);
        CHECK(t.substr(0, 11) == "strong: no\n");
        CHECK(t.find("orders: 125 250 250\n") != std::string::npos);
        CHECK(t.find("W0_basis: [1 0]\n") != std::string::npos);
    }
    SUBCASE("emission is byte-stable") {
        for (ReportFormat fmt :
             {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Text})
            CHECK(emitted(s, fmt) == emitted(s, fmt));
    }
}

TEST_CASE("monomial report emission") {
    MonomialStructure s = analyze_monomial(2, 2, 3, 3);

    SUBCASE("json fields") {
        nlohmann::json j = report_json(s);
        CHECK(j["strong"] == false);
        CHECK(j["count"] == 2);
        CHECK(j["orders"] == nlohmann::json({8, 8}));
        CHECK(j["d"] == 3);
        CHECK(j["q_s"] == 3);
        CHECK(j["e_s"] == 1);
        CHECK(j["divisors"] == nlohmann::json({{1, 3}, {2, 1}}));
        CHECK(j["q"] == 4);
    }
    SUBCASE("csv and text") {
        CHECK(emitted(s, ReportFormat::Csv) == "2,8;8\n");
        std::string t = emitted(s, ReportFormat::Text);
        CHECK(t.substr(0, 11) == "strong: no\n");
        CHECK(t.find("divisors: (1,3) (2,1)\n") != std::string::npos);
        CHECK(t.find("orders: 8 8\n") != std::string::npos);
    }
}

TEST_CASE("huge component counts switch to order-multiplicity pairs") {
    MonomialStructure s = analyze_monomial(3, 18, 19684, 19684);
    REQUIRE(s.count == 9842);

    nlohmann::json expanded = report_json(s)["orders"];
    CHECK(expanded.size() == 9842);
    CHECK(expanded[0] == 7625597484987ull);
    CHECK(expanded[1] == 2 * 7625597484987ull);

    MonomialStructure wide = s;
    wide.count = 20000;
    wide.orders = {{8, 19999}, {16, 1}};
    CHECK(report_json(wide)["orders"] ==
          nlohmann::json({{8, 19999}, {16, 1}}));
    CHECK(emitted(wide, ReportFormat::Csv) == "20000,8*19999;16*1\n");
}

TEST_CASE("subgroup report emission") {
    FieldCtx F(2, 4);
    SubgroupReport r = subgroup_checks(F, 5, 3);

    nlohmann::json j = report_json(r);
    CHECK(j["all_pass"] == true);
    REQUIRE(j["checks"].size() == 3);
    CHECK(j["checks"][0]["name"] == "span_m_is_subfield");
    CHECK(j["checks"][0]["left_size"] == 4);

    std::string t = emitted(r, ReportFormat::Text);
    CHECK(t.find("span_m_is_subfield: pass (left 4, right 4)\n") !=
          std::string::npos);
    CHECK(t.find("all_pass: yes\n") != std::string::npos);

    std::string c = emitted(r, ReportFormat::Csv);
    CHECK(c.find("span_m_is_subfield,1,4,4\n") != std::string::npos);
}

TEST_CASE("partition report emission") {
    Partition part = {{0, 3, 6}, {1, 2, 4, 5, 7, 8}};
    CHECK(report_json(part).dump() == "[[0,3,6],[1,2,4,5,7,8]]");
    CHECK(emitted(part, ReportFormat::Csv) == "2,3;6\n");
    CHECK(emitted(part, ReportFormat::Text) ==
          "components: 2\n0 3 6\n1 2 4 5 7 8\n");
}

TEST_CASE("verification report emission") {
    VerifyCase ok;
    ok.p = 5;
    ok.e = 2;
    ok.q = 25;
    ok.l = 1;
    ok.ok = true;
    ok.components = 3;

    SUBCASE("single supplied function reads as a sentence") {
        CHECK(emitted(std::vector<VerifyCase>{ok}, ReportFormat::Text) ==
              "partitions agree, 3 components\n");
    }
    SUBCASE("single mismatch carries the counterexample") {
        VerifyCase bad = ok;
        bad.ok = false;
        bad.detail = "vertices 0 and 1 are apart in the first partition and "
                     "together in the second";
        std::string t =
            emitted(std::vector<VerifyCase>{bad}, ReportFormat::Text);
        CHECK(t.substr(0, 21) == "partitions disagree: ");
        CHECK(t.find("vertices 0 and 1") != std::string::npos);
    }
    SUBCASE("sweep lines end with a tally") {
        VerifyCase r1 = ok;
        r1.random = true;
        r1.seed = 42;
        VerifyCase r2 = r1;
        r2.q = 9;
        r2.p = 3;
        r2.seed = 43;
        r2.components = 5;
        std::string t =
            emitted(std::vector<VerifyCase>{r1, r2}, ReportFormat::Text);
        CHECK(t == "q=25 l=1 seed=42 components=3 ok\n"
                   "q=9 l=1 seed=43 components=5 ok\n"
                   "2/2 cases agree\n");
    }
    SUBCASE("json and csv rows") {
        VerifyCase r1 = ok;
        r1.random = true;
        r1.seed = 42;
        nlohmann::json j = report_json({r1});
        CHECK(j["ok"] == true);
        CHECK(j["cases"][0]["seed"] == 42);
        CHECK(j["cases"][0]["components"] == 3);
        CHECK(emitted(std::vector<VerifyCase>{r1}, ReportFormat::Csv) ==
              "25,1,42,3,1\n");
    }
}

TEST_CASE("diameter report emission") {
    std::ostringstream js, cs, ts;
    emit_diameter_report(4, ReportFormat::Json, js);
    CHECK(js.str() == "{\n  \"diameter\": 4\n}\n");
    emit_diameter_report(4, ReportFormat::Csv, cs);
    CHECK(cs.str() == "4\n");
    emit_diameter_report(4, ReportFormat::Text, ts);
    CHECK(ts.str() == "diameter: 4\n");
}
