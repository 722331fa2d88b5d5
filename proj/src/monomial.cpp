#include "fqdigraph/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fqdigraph/fplinalg.hpp"

namespace fqdigraph {

namespace {

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

struct DivisorPick {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> divisors;
    std::uint64_t q_s = 0;
    std::uint32_t e_s = 0;
};

// q_i = (q-1)/(p^{e_i}-1) over the divisors e_i of e, plus the largest q_i
// dividing t. The q_i strictly decrease in e_i and q_i = 1 at e_i = e always
// divides, so the pick is the smallest qualifying degree.
DivisorPick pick_subfield(std::uint64_t p, std::uint32_t e, std::uint64_t q,
                          std::uint64_t t) {
    DivisorPick out;
    for (std::uint32_t ei = 1; ei <= e; ++ei) {
        if (e % ei != 0) continue;
        std::uint64_t qi = (q - 1) / (checked_pow_u64(p, ei, kNoCap) - 1);
        out.divisors.emplace_back(ei, qi);
        if (out.q_s == 0 && t % qi == 0) {
            out.q_s = qi;
            out.e_s = ei;
        }
    }
    return out;
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

void check_exponents(std::uint64_t q, std::uint64_t m, std::uint64_t n) {
    if (m < 1 || m > q - 1 || n < 1 || n > q - 1)
        throw RangeError("exponents must lie in [1, q-1]");
}

}  // namespace

MonomialStructure analyze_monomial(std::uint64_t p, std::uint32_t e,
                                   std::uint64_t m, std::uint64_t n) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p));
    if (e < 1) throw RangeError("extension degree must be positive");
    const std::uint64_t q = checked_pow_u64(p, e, kNoCap);
    check_exponents(q, m, n);

    MonomialStructure s;
    s.p = p;
    s.e = e;
    s.q = q;
    s.m = m;
    s.n = n;
    s.d = gcd3(q - 1, m, n);

    DivisorPick pick = pick_subfield(p, e, q, s.d);
    s.divisors = std::move(pick.divisors);
    s.q_s = pick.q_s;
    s.e_s = pick.e_s;
    s.strong = (s.q_s == 1);

    const std::uint64_t big = checked_pow_u64(p, e + s.e_s, kNoCap);
    if (p == 2) {
        s.count = checked_pow_u64(2, e - s.e_s, kNoCap);
        s.orders = {{big, s.count}};
    } else {
        s.count = (checked_pow_u64(p, e - s.e_s, kNoCap) + 1) / 2;
        s.orders = {{big, 1}};
        if (s.count > 1) s.orders.emplace_back(2 * big, s.count - 1);
    }
    return s;
}

std::vector<Vertex> monomial_component_of(const FieldCtx& F, std::uint64_t m,
                                          std::uint64_t n, const Vertex& v,
                                          std::uint64_t cap) {
    check_vertex(F, 1, v);
    check_exponents(F.q(), m, n);
    MonomialStructure s = analyze_monomial(F.p(), F.e(), m, n);

    std::vector<elem_t> sub = F.subfield_elements(s.e_s);
    if (2 * std::uint64_t{F.q()} * sub.size() > cap)
        throw TooLarge("component exceeds the materialization cap");

    const elem_t base = v.rest[0];
    const elem_t nbase = F.neg(base);
    std::vector<Vertex> out;
    out.reserve(2 * std::size_t{F.q()} * sub.size());
    for (elem_t x = 0; x < F.q(); ++x) {
        for (elem_t w : sub) {
            out.push_back(Vertex{x, {F.add(base, w)}});
            out.push_back(Vertex{x, {F.add(nbase, w)}});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PowerSubgroup power_subgroup(const FieldCtx& F, std::uint64_t k) {
    if (k < 1) throw RangeError("exponent must be positive");
    const std::uint64_t q = F.q();

    PowerSubgroup out;
    out.k = k;
    out.kbar = std::gcd(q - 1, k);

    std::vector<char> seen(q, 0);
    for (elem_t x = 1; x < q; ++x)
        seen[F.pow(x, static_cast<std::int64_t>(k % (q - 1)))] = 1;
    for (elem_t i = 0; i < q; ++i)
        if (seen[i]) out.elements.push_back(i);

    if (out.elements.size() != (q - 1) / out.kbar)
        throw Error("internal", "power subgroup has unexpected size");
    return out;
}

namespace {

std::vector<elem_t> span_elements(const FieldCtx& F,
                                  const std::vector<elem_t>& gens) {
    std::vector<FpVec> vecs;
    vecs.reserve(gens.size());
    for (elem_t g : gens) vecs.push_back(flatten(F, {g}));
    SubspaceFp span = SubspaceFp::span_of(F.p(), F.e(), vecs);

    std::vector<elem_t> out;
    for (const FpVec& w : span.coset(FpVec(F.e(), 0)))
        out.push_back(unflatten(F, w)[0]);
    std::sort(out.begin(), out.end());
    return out;
}

SubgroupCheck span_check(const FieldCtx& F, std::uint64_t k,
                         const std::string& name) {
    PowerSubgroup A = power_subgroup(F, k);
    DivisorPick pick = pick_subfield(F.p(), F.e(), F.q(), A.kbar);
    std::vector<elem_t> sub = F.subfield_elements(pick.e_s);
    std::vector<elem_t> spanned = span_elements(F, A.elements);

    SubgroupCheck c;
    c.name = name;
    c.left_size = spanned.size();
    c.right_size = sub.size();
    c.pass = (spanned == sub);
    return c;
}

}  // namespace

SubgroupReport subgroup_checks(const FieldCtx& F, std::uint64_t m,
                               std::uint64_t n) {
    if (m < 1 || n < 1) throw RangeError("exponents must be positive");
    const std::uint64_t q = F.q();

    SubgroupReport r;
    r.checks.push_back(span_check(F, m, "span_m_is_subfield"));
    r.checks.push_back(span_check(F, n, "span_n_is_subfield"));

    PowerSubgroup Am = power_subgroup(F, m);
    PowerSubgroup An = power_subgroup(F, n);
    PowerSubgroup Ad = power_subgroup(F, gcd3(q - 1, m, n));

    std::vector<char> seen(q, 0);
    for (elem_t a : Am.elements)
        for (elem_t b : An.elements) seen[F.mul(a, b)] = 1;
    std::vector<elem_t> prod;
    for (elem_t i = 0; i < q; ++i)
        if (seen[i]) prod.push_back(i);

    SubgroupCheck c;
    c.name = "product_is_gcd_powers";
    c.left_size = prod.size();
    c.right_size = Ad.elements.size();
    c.pass = (prod == Ad.elements);
    r.checks.push_back(c);

    r.all_pass = std::all_of(r.checks.begin(), r.checks.end(),
                             [](const SubgroupCheck& x) { return x.pass; });
    return r;
}

}  // namespace fqdigraph
