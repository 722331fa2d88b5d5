#include <doctest.h>

#include <random>
#include <vector>

#include "fqdigraph/funcspec.hpp"

using namespace fqdigraph;
using nlohmann::json;

namespace {

// the worked q = 25 example: classes {0}, {1}, everything else on each axis
std::vector<std::vector<elem_t>> example_f25_rows() {
    const elem_t T[3][3] = {{0, 5, 1}, {5, 10, 5}, {2, 5, 0}};  // [y-class][x-class]
    std::vector<std::vector<elem_t>> rows;
    rows.reserve(625);
    auto cls = [](elem_t t) { return t == 0 ? 0 : (t == 1 ? 1 : 2); };
    for (elem_t x = 0; x < 25; ++x) {
        for (elem_t y = 0; y < 25; ++y) {
            rows.push_back({T[cls(y)][cls(x)]});
        }
    }
    return rows;
}

std::vector<std::vector<elem_t>> random_rows(const FieldCtx& F, std::uint32_t l,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<elem_t>> rows(
        static_cast<std::size_t>(F.q()) * F.q());
    for (auto& row : rows) {
        row.resize(l);
        for (auto& v : row) v = static_cast<elem_t>(rng() % F.q());
    }
    return rows;
}

}  // namespace

TEST_CASE("monomial evaluation") {
    FieldCtx F5(5, 1);
    auto f = make_monomial_funcspec(F5, 2, 3);
    CHECK(eval_f(F5, f, 2, 2) == std::vector<elem_t>{2});
    CHECK(eval_f(F5, f, 0, 3) == std::vector<elem_t>{0});
    CHECK(eval_f(F5, f, 3, 0) == std::vector<elem_t>{0});

    FieldCtx F4(2, 2);
    auto g = make_monomial_funcspec(F4, 3, 3);
    for (elem_t x = 1; x < 4; ++x) {
        for (elem_t y = 1; y < 4; ++y) {
            CHECK(eval_f(F4, g, x, y) == std::vector<elem_t>{1});  // cubes in F_4*
        }
    }
    CHECK_THROWS_AS(make_monomial_funcspec(F4, 0, 1), RangeError);
    CHECK_THROWS_AS(make_monomial_funcspec(F4, 1, 4), RangeError);
}

TEST_CASE("table form evaluation and validation") {
    FieldCtx F(5, 2, std::vector<coeff_t>{2, 4, 1});
    auto f = make_table_funcspec(F, example_f25_rows());
    CHECK(f.l == 1);
    CHECK(eval_f(F, f, 1, 0) == std::vector<elem_t>{5});
    CHECK(eval_f(F, f, 0, 0) == std::vector<elem_t>{0});
    CHECK(eval_f(F, f, 7, 19) == std::vector<elem_t>{0});
    CHECK(eval_f(F, f, F.elem(1), F.elem(0)) ==
          std::vector<FieldElem>{F.elem(5)});

    auto short_rows = example_f25_rows();
    short_rows.pop_back();
    CHECK_THROWS_AS(make_table_funcspec(F, short_rows), ShapeError);
    auto bad = example_f25_rows();
    bad[7] = {25};
    CHECK_THROWS_AS(make_table_funcspec(F, bad), RangeError);
    auto ragged = example_f25_rows();
    ragged[3] = {1, 2};
    CHECK_THROWS_AS(make_table_funcspec(F, ragged), ShapeError);
}

TEST_CASE("poly form evaluation") {
    FieldCtx F(3, 1);
    // f_0 = 1 + 2xy, f_1 = x^2 + y
    auto f = make_poly_funcspec(F, {{{1}, {0, 2}}, {{0, 1}, {}, {1}}});
    CHECK(f.l == 2);
    CHECK(eval_f(F, f, 2, 2) == std::vector<elem_t>{0, 0});
    CHECK(eval_f(F, f, 1, 2) == std::vector<elem_t>{2, 0});
    CHECK(eval_f(F, f, 0, 0) == std::vector<elem_t>{1, 0});

    CHECK_THROWS_AS(
        make_poly_funcspec(F, {{{1}, {1}, {1}, {1}}}), RangeError);
    CHECK_THROWS_AS(make_poly_funcspec(F, {{{3}}}), RangeError);
}

TEST_CASE("derived functions of the worked example") {
    FieldCtx F(5, 2, std::vector<coeff_t>{2, 4, 1});
    auto f = make_table_funcspec(F, example_f25_rows());
    auto d = derive(F, f);
    CHECK(d.f00 == std::vector<elem_t>{0});
    CHECK(d.g[0] == std::vector<elem_t>{0});
    CHECK(d.g[1] == std::vector<elem_t>{5});
    CHECK(d.h[1] == std::vector<elem_t>{5});
    for (elem_t t = 2; t < 25; ++t) {
        CHECK(d.g[t] == std::vector<elem_t>{1});
        CHECK(d.h[t] == std::vector<elem_t>{2});
    }
    // doubly reduced table by class: columns x in {0}, {1}, else
    auto tf = [&](elem_t x, elem_t y) { return d.tilde_f0[x * 25 + y][0]; };
    CHECK(tf(0, 0) == 0);
    CHECK(tf(1, 0) == 0);
    CHECK(tf(2, 0) == F.neg(1));
    CHECK(tf(2, 1) == F.neg(2));
    CHECK(tf(0, 2) == 1);
    CHECK(tf(1, 2) == F.neg(1));
    CHECK(tf(3, 17) == F.neg(3));
}

TEST_CASE("derive on monomial and constant functions") {
    FieldCtx F(2, 2);
    auto mono = derive(F, make_monomial_funcspec(F, 3, 3));
    CHECK(mono.f00 == std::vector<elem_t>{0});
    for (elem_t t = 0; t < 4; ++t) {
        CHECK(mono.g[t] == std::vector<elem_t>{0});
        CHECK(mono.h[t] == std::vector<elem_t>{0});
    }
    CHECK(mono.tilde_f0 == mono.f_table);

    auto c = derive(F, make_poly_funcspec(F, {{{3}}}));
    CHECK(c.f00 == std::vector<elem_t>{3});
    for (std::size_t r = 0; r < 16; ++r) {
        CHECK(c.tilde_f0[r] == std::vector<elem_t>{0});
        CHECK(c.f_table[r] == std::vector<elem_t>{3});
    }
}

TEST_CASE("derived-function identities on random tables") {
    for (auto [p, e, l, seed] :
         std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t,
                                std::uint64_t>>{
             {3, 2, 2, 11}, {2, 3, 1, 12}, {7, 1, 3, 13}, {5, 1, 2, 14}}) {
        FieldCtx F(p, e);
        auto f = make_table_funcspec(F, random_rows(F, l, seed));
        auto d = derive(F, f);
        const std::uint32_t q = F.q();
        for (std::uint32_t i = 0; i < l; ++i) {
            CHECK(d.g[0][i] == 0);
            CHECK(d.h[0][i] == 0);
        }
        for (elem_t x = 0; x < q; ++x) {
            for (elem_t y = 0; y < q; ++y) {
                for (std::uint32_t i = 0; i < l; ++i) {
                    elem_t rebuilt = F.add(
                        F.add(d.f00[i], d.g[y][i]),
                        F.add(d.h[x][i], d.tilde_f0[x * q + y][i]));
                    CHECK(rebuilt == d.f_table[x * q + y][i]);
                }
            }
        }
        for (elem_t t = 0; t < q; ++t) {
            for (std::uint32_t i = 0; i < l; ++i) {
                elem_t gmh = F.sub(d.g[t][i], d.h[t][i]);
                CHECK(d.tilde_f0[t * q + 0][i] == gmh);
                CHECK(d.tilde_f0[0 * q + t][i] == F.neg(gmh));
            }
        }
    }
}

TEST_CASE("interpolation reproduces tables exactly") {
    FieldCtx F4(2, 2);
    auto cubes = make_monomial_funcspec(F4, 3, 3);
    auto poly = interpolate(F4, cubes);
    CHECK(poly.form == FuncForm::Poly);
    for (elem_t x = 0; x < 4; ++x) {
        for (elem_t y = 0; y < 4; ++y) {
            CHECK(eval_f(F4, poly, x, y) == eval_f(F4, cubes, x, y));
        }
    }

    FieldCtx F5(5, 1);
    auto c = interpolate(
        F5, make_table_funcspec(
                F5, std::vector<std::vector<elem_t>>(25, {4})));
    CHECK(c.coeffs == std::vector<std::vector<std::vector<elem_t>>>{{{4}}});

    auto f = make_table_funcspec(F5, random_rows(F5, 2, 21));
    auto fp = interpolate(F5, f);
    CHECK(fp.l == 2);
    for (const auto& grid : fp.coeffs) {
        CHECK(grid.size() <= 5);
        for (const auto& row : grid) CHECK(row.size() <= 5);
    }
    for (elem_t x = 0; x < 5; ++x) {
        for (elem_t y = 0; y < 5; ++y) {
            CHECK(eval_f(F5, fp, x, y) == eval_f(F5, f, x, y));
        }
    }
}

TEST_CASE("json parsing of the three forms") {
    FieldCtx F4(2, 2);
    auto f = parse_funcspec(F4, json::parse(R"({"monomial": {"m": 3, "n": 3}})"));
    CHECK(f.form == FuncForm::Monomial);
    CHECK(f.m == 3);
    CHECK(f.n == 3);
    CHECK(f.l == 1);

    FieldCtx F2(2, 1);
    auto t = parse_funcspec(
        F2, json::parse(R"({"l": 1, "table": [[0],[1],[1],[0]]})"));
    CHECK(t.form == FuncForm::Table);
    CHECK(eval_f(F2, t, 1, 0) == std::vector<elem_t>{1});

    auto p = parse_funcspec(F2, json::parse(R"({"poly": [[[1],[1]]]})"));
    CHECK(eval_f(F2, p, 1, 1) == std::vector<elem_t>{0});  // 1 + x at x=1

    CHECK_THROWS_AS(parse_funcspec(F2, json::parse(R"({"l": 1})")), SchemaError);
    CHECK_THROWS_AS(
        parse_funcspec(F2, json::parse(
                               R"({"table": [[0],[1],[1],[0]], "monomial": {"m":1,"n":1}})")),
        SchemaError);
    CHECK_THROWS_AS(
        parse_funcspec(F2, json::parse(R"({"l": 2, "table": [[0],[1],[1],[0]]})")),
        SchemaError);
    CHECK_THROWS_AS(
        parse_funcspec(F2, json::parse(R"({"table": [[0],[1],[-1],[0]]})")),
        SchemaError);
    CHECK_THROWS_AS(
        parse_funcspec(F2, json::parse(R"({"monomial": {"m": 9, "n": 1}})")),
        RangeError);
    CHECK_THROWS_AS(
        parse_funcspec(F2, json::parse(R"({"monomial": {"m": 1}})")),
        SchemaError);
}

TEST_CASE("whole-instance parsing") {
    auto inst = parse_instance(json::parse(
        R"({"field": {"p": 5, "e": 2, "modulus": [2, 4, 1]}, "l": 1,
            "monomial": {"m": 2, "n": 2}})"));
    CHECK(inst.field.q() == 25);
    CHECK(inst.field.modulus() == std::vector<coeff_t>{2, 4, 1});
    CHECK(inst.f.form == FuncForm::Monomial);

    auto def = parse_instance(
        json::parse(R"({"field": {"p": 3, "e": 2}, "monomial": {"m": 1, "n": 1}})"));
    CHECK(def.field.modulus() == std::vector<coeff_t>{1, 0, 1});

    CHECK_THROWS_AS(parse_instance(json::parse(R"({"l": 1})")), SchemaError);
    CHECK_THROWS_AS(
        parse_instance(json::parse(R"({"field": {"p": 4, "e": 1},
                                       "monomial": {"m": 1, "n": 1}})")),
        NotPrime);
    CHECK_THROWS_AS(
        parse_instance(json::parse(R"({"field": {"p": "five", "e": 1},
                                       "monomial": {"m": 1, "n": 1}})")),
        SchemaError);
}
