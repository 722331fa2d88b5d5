#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "fqdigraph/errors.hpp"
#include "fqdigraph/field.hpp"

namespace fqdigraph {

enum class FuncForm { Table, Poly, Monomial };

/// Defining function f: F_q x F_q -> F_q^l in one of three forms. Table rows
/// are ordered by index(x)*q + index(y). Poly keeps one coefficient grid per
/// component, c[i][j] multiplying x^i y^j. Monomial is x^m y^n with l = 1.
struct FuncSpec {
    FuncForm form = FuncForm::Table;
    std::uint32_t l = 1;
    std::vector<std::vector<elem_t>> table;                // [q*q][l]
    std::vector<std::vector<std::vector<elem_t>>> coeffs;  // [l][<=q][<=q]
    std::uint32_t m = 0;
    std::uint32_t n = 0;
};

FuncSpec make_table_funcspec(const FieldCtx& F,
                             std::vector<std::vector<elem_t>> rows);
FuncSpec make_poly_funcspec(const FieldCtx& F,
                            std::vector<std::vector<std::vector<elem_t>>> grids);
FuncSpec make_monomial_funcspec(const FieldCtx& F, std::uint32_t m,
                                std::uint32_t n);

/// Reads the function part of a parsed JSON document holding exactly one of
/// "table", "poly", "monomial", plus an optional consistent "l".
FuncSpec parse_funcspec(const FieldCtx& F, const nlohmann::json& doc);

/// A whole instance document: {"field": {"p", "e", "modulus"?}, "l"?, <form>}.
struct Instance {
    FieldCtx field;
    FuncSpec f;
};
Instance parse_instance(const nlohmann::json& doc,
                        std::uint64_t q_cap = FieldCtx::kDefaultQCap);

std::vector<elem_t> eval_f(const FieldCtx& F, const FuncSpec& f, elem_t x,
                           elem_t y);
std::vector<FieldElem> eval_f(const FieldCtx& F, const FuncSpec& f,
                              const FieldElem& x, const FieldElem& y);

/// g, h, f(0,0) and the doubly-reduced part of f, all materialized as tables:
/// g(t) = f(t,0) - f(0,0), h(t) = f(0,t) - f(0,0),
/// tilde_f0(x,y) = f(x,y) - f(0,0) - g(y) - h(x).
struct DerivedFuncs {
    std::uint32_t l = 1;
    std::vector<elem_t> f00;                     // [l]
    std::vector<std::vector<elem_t>> g;          // [q][l]
    std::vector<std::vector<elem_t>> h;          // [q][l]
    std::vector<std::vector<elem_t>> f_table;    // [q*q][l]
    std::vector<std::vector<elem_t>> tilde_f0;   // [q*q][l]
};

DerivedFuncs derive(const FieldCtx& F, const FuncSpec& f);

/// The unique polynomial form with per-variable degree <= q-1 that agrees
/// with f everywhere, grids trimmed to the actual degrees.
FuncSpec interpolate(const FieldCtx& F, const FuncSpec& f);

}  // namespace fqdigraph
