#include "fqdigraph/funcspec.hpp"

#include <string>
#include <utility>

namespace fqdigraph {

namespace {

constexpr std::uint64_t kTableEntryCap = std::uint64_t{1} << 24;

void check_entry(const FieldCtx& F, std::uint64_t v, const char* what) {
    if (v >= F.q()) {
        throw RangeError(std::string(what) + " " + std::to_string(v) +
                         " not below q = " + std::to_string(F.q()));
    }
}

std::uint64_t get_uint(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        throw SchemaError(std::string(what) + " must be an integer");
    }
    if (j.is_number_integer() && j.get<std::int64_t>() < 0) {
        throw SchemaError(std::string(what) + " must be nonnegative");
    }
    return j.get<std::uint64_t>();
}

// Coefficients of the quotient (X^q - X) / (X - a), most useful as the
// Lagrange basis polynomial through all of F_q: L_a = -quotient.
std::vector<elem_t> lagrange_quotient(const FieldCtx& F, elem_t a) {
    const std::uint32_t q = F.q();
    std::vector<elem_t> b(q, 0);
    b[q - 1] = 1;
    const elem_t minus_one = F.neg(1);
    for (std::uint32_t i = q - 1; i >= 1; --i) {
        elem_t m_i = (i == 1) ? minus_one : 0;
        b[i - 1] = F.add(m_i, F.mul(a, b[i]));
    }
    return b;
}

// Unique degree < q polynomial through (a, vals[a]) for every a in F_q.
std::vector<elem_t> univariate_interpolate(const FieldCtx& F,
                                           const std::vector<elem_t>& vals) {
    const std::uint32_t q = F.q();
    std::vector<elem_t> out(q, 0);
    for (elem_t a = 0; a < q; ++a) {
        if (vals[a] == 0) continue;
        std::vector<elem_t> quot = lagrange_quotient(F, a);
        for (std::uint32_t j = 0; j < q; ++j) {
            out[j] = F.sub(out[j], F.mul(vals[a], quot[j]));
        }
    }
    return out;
}

std::vector<std::vector<elem_t>> full_table(const FieldCtx& F,
                                            const FuncSpec& f) {
    if (f.form == FuncForm::Table) return f.table;
    const std::uint64_t q = F.q();
    std::vector<std::vector<elem_t>> rows;
    rows.reserve(static_cast<std::size_t>(q * q));
    for (elem_t x = 0; x < q; ++x) {
        for (elem_t y = 0; y < q; ++y) {
            rows.push_back(eval_f(F, f, x, y));
        }
    }
    return rows;
}

void check_derive_cap(const FieldCtx& F, std::uint32_t l) {
    const std::uint64_t entries =
        static_cast<std::uint64_t>(F.q()) * F.q() * l;
    if (entries > kTableEntryCap) {
        throw TooLarge("materialized tables would hold " +
                       std::to_string(entries) + " entries");
    }
}

}  // namespace

FuncSpec make_table_funcspec(const FieldCtx& F,
                             std::vector<std::vector<elem_t>> rows) {
    const std::uint64_t q = F.q();
    if (rows.size() != q * q) {
        throw ShapeError("table has " + std::to_string(rows.size()) +
                         " rows, expected q^2 = " + std::to_string(q * q));
    }
    if (rows[0].empty()) throw ShapeError("table rows must not be empty");
    const std::size_t l = rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != l) {
            throw ShapeError("table rows of unequal length");
        }
        for (elem_t v : row) check_entry(F, v, "table entry");
    }
    FuncSpec f;
    f.form = FuncForm::Table;
    f.l = static_cast<std::uint32_t>(l);
    f.table = std::move(rows);
    return f;
}

FuncSpec make_poly_funcspec(
    const FieldCtx& F, std::vector<std::vector<std::vector<elem_t>>> grids) {
    if (grids.empty()) throw ShapeError("poly form needs at least one grid");
    const std::uint32_t q = F.q();
    for (const auto& grid : grids) {
        if (grid.size() > q) {
            throw RangeError("x-degree " + std::to_string(grid.size() - 1) +
                             " exceeds q-1");
        }
        for (const auto& row : grid) {
            if (row.size() > q) {
                throw RangeError("y-degree " + std::to_string(row.size() - 1) +
                                 " exceeds q-1");
            }
            for (elem_t v : row) check_entry(F, v, "coefficient");
        }
    }
    FuncSpec f;
    f.form = FuncForm::Poly;
    f.l = static_cast<std::uint32_t>(grids.size());
    f.coeffs = std::move(grids);
    return f;
}

FuncSpec make_monomial_funcspec(const FieldCtx& F, std::uint32_t m,
                                std::uint32_t n) {
    if (m < 1 || m > F.q() - 1 || n < 1 || n > F.q() - 1) {
        throw RangeError("exponents (" + std::to_string(m) + ", " +
                         std::to_string(n) + ") outside [1, q-1]");
    }
    FuncSpec f;
    f.form = FuncForm::Monomial;
    f.l = 1;
    f.m = m;
    f.n = n;
    return f;
}

FuncSpec parse_funcspec(const FieldCtx& F, const nlohmann::json& doc) {
    if (!doc.is_object()) throw SchemaError("document must be an object");
    int forms = doc.contains("table") + doc.contains("poly") +
                doc.contains("monomial");
    if (forms != 1) {
        throw SchemaError(
            "document must hold exactly one of table, poly, monomial");
    }
    std::uint32_t l_declared = 0;
    if (doc.contains("l")) {
        std::uint64_t l = get_uint(doc.at("l"), "l");
        if (l < 1) throw SchemaError("l must be at least 1");
        l_declared = static_cast<std::uint32_t>(l);
    }

    FuncSpec f;
    if (doc.contains("table")) {
        const auto& jt = doc.at("table");
        if (!jt.is_array()) throw SchemaError("table must be an array");
        std::vector<std::vector<elem_t>> rows;
        rows.reserve(jt.size());
        for (const auto& jr : jt) {
            if (!jr.is_array()) throw SchemaError("table rows must be arrays");
            std::vector<elem_t> row;
            row.reserve(jr.size());
            for (const auto& jv : jr) {
                row.push_back(
                    static_cast<elem_t>(get_uint(jv, "table entry")));
            }
            rows.push_back(std::move(row));
        }
        f = make_table_funcspec(F, std::move(rows));
    } else if (doc.contains("poly")) {
        const auto& jp = doc.at("poly");
        if (!jp.is_array()) throw SchemaError("poly must be an array");
        std::vector<std::vector<std::vector<elem_t>>> grids;
        for (const auto& jg : jp) {
            if (!jg.is_array()) throw SchemaError("poly grids must be arrays");
            std::vector<std::vector<elem_t>> grid;
            for (const auto& jr : jg) {
                if (!jr.is_array()) {
                    throw SchemaError("poly grid rows must be arrays");
                }
                std::vector<elem_t> row;
                for (const auto& jv : jr) {
                    row.push_back(
                        static_cast<elem_t>(get_uint(jv, "coefficient")));
                }
                grid.push_back(std::move(row));
            }
            grids.push_back(std::move(grid));
        }
        f = make_poly_funcspec(F, std::move(grids));
    } else {
        const auto& jm = doc.at("monomial");
        if (!jm.is_object() || !jm.contains("m") || !jm.contains("n")) {
            throw SchemaError("monomial must be an object with m and n");
        }
        std::uint64_t m = get_uint(jm.at("m"), "m");
        std::uint64_t n = get_uint(jm.at("n"), "n");
        if (m > F.q() || n > F.q()) {
            throw RangeError("exponents outside [1, q-1]");
        }
        f = make_monomial_funcspec(F, static_cast<std::uint32_t>(m),
                                   static_cast<std::uint32_t>(n));
    }
    if (l_declared != 0 && l_declared != f.l) {
        throw SchemaError("declared l = " + std::to_string(l_declared) +
                          " does not match the function data (l = " +
                          std::to_string(f.l) + ")");
    }
    return f;
}

Instance parse_instance(const nlohmann::json& doc, std::uint64_t q_cap) {
    if (!doc.is_object() || !doc.contains("field")) {
        throw SchemaError("document must be an object with a field entry");
    }
    const auto& jf = doc.at("field");
    if (!jf.is_object() || !jf.contains("p") || !jf.contains("e")) {
        throw SchemaError("field must be an object with p and e");
    }
    std::uint64_t p = get_uint(jf.at("p"), "p");
    std::uint64_t e = get_uint(jf.at("e"), "e");
    if (p > 0xffffffffull || e > 0xffffffffull) {
        throw TooLarge("field parameters out of range");
    }
    std::optional<std::vector<coeff_t>> modulus;
    if (jf.contains("modulus")) {
        const auto& jm = jf.at("modulus");
        if (!jm.is_array()) throw SchemaError("modulus must be an array");
        std::vector<coeff_t> m;
        for (const auto& jv : jm) {
            std::uint64_t c = get_uint(jv, "modulus coefficient");
            if (c > 0xffff) throw BadModulus("modulus coefficient too large");
            m.push_back(static_cast<coeff_t>(c));
        }
        modulus = std::move(m);
    }
    FieldCtx F(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e),
               std::move(modulus), q_cap);
    FuncSpec f = parse_funcspec(F, doc);
    return Instance{std::move(F), std::move(f)};
}

std::vector<elem_t> eval_f(const FieldCtx& F, const FuncSpec& f, elem_t x,
                           elem_t y) {
    const std::uint32_t q = F.q();
    if (x >= q || y >= q) throw IndexOutOfRange("element index not below q");
    switch (f.form) {
        case FuncForm::Table:
            return f.table[static_cast<std::size_t>(x) * q + y];
        case FuncForm::Poly: {
            std::vector<elem_t> out;
            out.reserve(f.l);
            for (const auto& grid : f.coeffs) {
                elem_t acc = 0;
                for (std::size_t i = grid.size(); i-- > 0;) {
                    elem_t row_val = 0;
                    for (std::size_t j = grid[i].size(); j-- > 0;) {
                        row_val = F.add(F.mul(row_val, y), grid[i][j]);
                    }
                    acc = F.add(F.mul(acc, x), row_val);
                }
                out.push_back(acc);
            }
            return out;
        }
        case FuncForm::Monomial:
            return {F.mul(F.pow(x, f.m), F.pow(y, f.n))};
    }
    throw Error("internal", "unreachable function form");
}

std::vector<FieldElem> eval_f(const FieldCtx& F, const FuncSpec& f,
                              const FieldElem& x, const FieldElem& y) {
    std::vector<elem_t> idx = eval_f(F, f, F.index_of(x), F.index_of(y));
    std::vector<FieldElem> out;
    out.reserve(idx.size());
    for (elem_t v : idx) out.push_back(F.elem(v));
    return out;
}

DerivedFuncs derive(const FieldCtx& F, const FuncSpec& f) {
    check_derive_cap(F, f.l);
    const std::uint32_t q = F.q();
    DerivedFuncs d;
    d.l = f.l;
    d.f_table = full_table(F, f);
    d.f00 = d.f_table[0];

    auto row_minus_f00 = [&](std::size_t row) {
        std::vector<elem_t> out(f.l);
        for (std::uint32_t i = 0; i < f.l; ++i) {
            out[i] = F.sub(d.f_table[row][i], d.f00[i]);
        }
        return out;
    };
    d.g.reserve(q);
    d.h.reserve(q);
    for (elem_t t = 0; t < q; ++t) {
        d.g.push_back(row_minus_f00(static_cast<std::size_t>(t) * q));  // f(t,0)
        d.h.push_back(row_minus_f00(t));                                // f(0,t)
    }
    d.tilde_f0.reserve(static_cast<std::size_t>(q) * q);
    for (elem_t x = 0; x < q; ++x) {
        for (elem_t y = 0; y < q; ++y) {
            std::vector<elem_t> row(f.l);
            for (std::uint32_t i = 0; i < f.l; ++i) {
                elem_t v = d.f_table[static_cast<std::size_t>(x) * q + y][i];
                v = F.sub(v, d.f00[i]);
                v = F.sub(v, d.g[y][i]);
                v = F.sub(v, d.h[x][i]);
                row[i] = v;
            }
            d.tilde_f0.push_back(std::move(row));
        }
    }
    return d;
}

FuncSpec interpolate(const FieldCtx& F, const FuncSpec& f) {
    check_derive_cap(F, f.l);
    const std::uint32_t q = F.q();
    const auto table = full_table(F, f);
    std::vector<std::vector<std::vector<elem_t>>> grids;
    grids.reserve(f.l);
    for (std::uint32_t comp = 0; comp < f.l; ++comp) {
        // first in y for each fixed x, then in x for each y-degree
        std::vector<std::vector<elem_t>> ycoef(q);
        std::vector<elem_t> vals(q);
        for (elem_t a = 0; a < q; ++a) {
            for (elem_t b = 0; b < q; ++b) {
                vals[b] = table[static_cast<std::size_t>(a) * q + b][comp];
            }
            ycoef[a] = univariate_interpolate(F, vals);
        }
        std::vector<std::vector<elem_t>> grid(q, std::vector<elem_t>(q, 0));
        for (std::uint32_t j = 0; j < q; ++j) {
            for (elem_t a = 0; a < q; ++a) vals[a] = ycoef[a][j];
            std::vector<elem_t> xcoef = univariate_interpolate(F, vals);
            for (std::uint32_t i = 0; i < q; ++i) grid[i][j] = xcoef[i];
        }
        // trim to the true degrees, keeping at least a 1x1 grid
        std::size_t max_i = 0, max_j = 0;
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                if (grid[i][j] != 0) {
                    max_i = std::max(max_i, i);
                    max_j = std::max(max_j, j);
                }
            }
        }
        grid.resize(max_i + 1);
        for (auto& row : grid) row.resize(max_j + 1);
        grids.push_back(std::move(grid));
    }
    return make_poly_funcspec(F, std::move(grids));
}

}  // namespace fqdigraph
