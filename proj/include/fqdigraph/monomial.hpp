#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqdigraph/errors.hpp"
#include "fqdigraph/field.hpp"
#include "fqdigraph/theorem.hpp"
#include "fqdigraph/vertex.hpp"

namespace fqdigraph {

/// Strong-component structure of the monomial digraph D(q; m, n), computed
/// with integer arithmetic only. For every divisor e_i of e the quotient
/// q_i = (q-1)/(p^{e_i}-1) is tabulated; q_s is the largest q_i dividing
/// d = gcd(q-1, m, n) and e_s its degree. The digraph is strong exactly when
/// q_s = 1, i.e. e_s = e.
struct MonomialStructure {
    std::uint64_t p = 0;
    std::uint32_t e = 0;
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    /// (e_i, q_i) for each divisor e_i of e, ascending in e_i.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> divisors;
    std::uint64_t q_s = 0;
    std::uint32_t e_s = 0;
    bool strong = false;
    std::uint64_t count = 0;
    /// (order, multiplicity), ascending by order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> orders;
};

/// A_k = {x^k : x in F_q*}, the k-th power subgroup, enumerated.
struct PowerSubgroup {
    std::uint64_t k = 0;
    std::uint64_t kbar = 0;  // gcd(q-1, k)
    std::vector<elem_t> elements;  // sorted element indices
};

struct SubgroupCheck {
    std::string name;
    bool pass = false;
    std::uint64_t left_size = 0;
    std::uint64_t right_size = 0;
};

struct SubgroupReport {
    std::vector<SubgroupCheck> checks;
    bool all_pass = false;
};

/// Structure of D(q; m, n) from gcds and the divisor table alone; no field
/// tables are built, so this scales far past explicit-graph reach.
MonomialStructure analyze_monomial(std::uint64_t p, std::uint32_t e,
                                   std::uint64_t m, std::uint64_t n);

/// Vertex set of the strong component of v in D(q; m, n): the union of the
/// coset families (x, v + F_{p^{e_s}}) and (x, -v + F_{p^{e_s}}) over all x.
/// Sorted by vertex index.
std::vector<Vertex> monomial_component_of(const FieldCtx& F, std::uint64_t m,
                                          std::uint64_t n, const Vertex& v,
                                          std::uint64_t cap = kDefaultCosetCap);

PowerSubgroup power_subgroup(const FieldCtx& F, std::uint64_t k);

/// Enumerative verification of the subgroup facts behind the monomial fast
/// path: the F_p-span of A_m (and of A_n) is the subfield F_{p^{e_s}} picked
/// by gcd(q-1, .), and A_m * A_n = A_{gcd(q-1, m, n)} as sets.
SubgroupReport subgroup_checks(const FieldCtx& F, std::uint64_t m,
                               std::uint64_t n);

}  // namespace fqdigraph
