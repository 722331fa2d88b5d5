#include "fqdigraph/theorem.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fqdigraph {

namespace {

using ElemVec = std::vector<elem_t>;

ElemVec add_vec(const FieldCtx& F, const ElemVec& a, const ElemVec& b) {
    ElemVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

ElemVec sub_vec(const FieldCtx& F, const ElemVec& a, const ElemVec& b) {
    ElemVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

ElemVec neg_vec(const FieldCtx& F, const ElemVec& a) {
    ElemVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
    return r;
}

constexpr std::uint64_t kCountCap = ~std::uint64_t{0} >> 1;

}  // namespace

Analysis analyze_full(const FieldCtx& F, const FuncSpec& f) {
    Analysis A{derive(F, f), {}};
    const DerivedFuncs& der = A.derived;
    ComponentStructure& s = A.structure;

    const std::uint32_t p = F.p();
    const std::uint32_t e = F.e();
    s.el = e * f.l;
    s.parity = (p % 2 == 0) ? Parity::Even : Parity::Odd;

    SubspaceFp W0(p, s.el);
    for (const auto& row : der.tilde_f0) W0.extend(flatten(F, row));
    s.d = W0.dim();
    s.f00_in_W0 = W0.contains(flatten(F, der.f00));

    if (s.parity == Parity::Odd) {
        s.W = W0;
        s.count = (checked_pow_u64(p, s.el - s.d, kCountCap) + 1) / 2;
        const std::uint64_t small = checked_pow_u64(p, e + s.d, kCountCap);
        s.orders.emplace_back(small, 1);
        if (s.count > 1) s.orders.emplace_back(2 * small, s.count - 1);
    } else {
        SubspaceFp W = W0;
        W.extend(flatten(F, der.f00));
        const std::uint32_t dW = W.dim();
        s.count = checked_pow_u64(2, s.el - dW, kCountCap);
        s.orders.emplace_back(checked_pow_u64(2, e + dW, kCountCap), s.count);
        s.W = std::move(W);
    }
    s.W0 = std::move(W0);
    s.strong = (s.count == 1);
    return A;
}

ComponentStructure analyze(const FieldCtx& F, const FuncSpec& f) {
    return analyze_full(F, f).structure;
}

ComponentDescriptor component_of(const FieldCtx& F, const Analysis& A,
                                 const Vertex& v) {
    check_vertex(F, A.derived.l, v);
    const DerivedFuncs& der = A.derived;
    const ComponentStructure& s = A.structure;
    ComponentDescriptor desc;
    desc.parity = s.parity;
    if (s.parity == Parity::Odd) {
        ElemVec va = sub_vec(F, v.rest, der.g[v.first]);
        ElemVec vb = add_vec(
            F, add_vec(F, neg_vec(F, v.rest), der.g[v.first]), der.f00);
        desc.half_a = s.W0.reduce(flatten(F, va));
        desc.half_b = s.W0.reduce(flatten(F, vb));
        desc.degenerate = (desc.half_a == desc.half_b);
    } else {
        ElemVec va = add_vec(F, v.rest, der.g[v.first]);
        desc.half_a = s.W.reduce(flatten(F, va));
        desc.degenerate = false;
    }
    return desc;
}

bool same_component(const FieldCtx& F, const Analysis& A, const Vertex& u,
                    const Vertex& v) {
    return component_of(F, A, u).key() == component_of(F, A, v).key();
}

std::vector<Vertex> materialize(const FieldCtx& F, const Analysis& A,
                                const ComponentDescriptor& desc,
                                std::uint64_t cap) {
    const DerivedFuncs& der = A.derived;
    const ComponentStructure& s = A.structure;
    const std::uint32_t q = F.q();
    const SubspaceFp& space = (s.parity == Parity::Odd) ? s.W0 : s.W;

    const std::uint64_t halves =
        (s.parity == Parity::Odd && !desc.degenerate) ? 2 : 1;
    std::uint64_t order = space.size(cap);
    if (order > cap / q || order * q > cap / halves) {
        throw TooLarge("component order exceeds the cap of " +
                       std::to_string(cap));
    }
    order *= q * halves;

    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(order));
    auto emit_half = [&](const FpVec& rep) {
        for (const FpVec& w : space.coset(rep, cap)) {
            ElemVec base = unflatten(F, w);
            for (elem_t a = 0; a < q; ++a) {
                out.push_back(Vertex{a, add_vec(F, base, der.h[a])});
            }
        }
    };
    emit_half(desc.half_a);
    if (halves == 2) emit_half(desc.half_b);
    std::sort(out.begin(), out.end());
    return out;
}

Vertex phi_map(const FieldCtx& F, const Analysis& A, const Vertex& v) {
    if (F.p() == 2) {
        throw EvenCharacteristic("the shift by f(0,0)/2 needs odd q");
    }
    check_vertex(F, A.derived.l, v);
    const elem_t half = F.inv(2);
    ElemVec rest = v.rest;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] = F.sub(rest[i], F.mul(half, A.derived.f00[i]));
    }
    return Vertex{v.first, std::move(rest)};
}

Vertex phi_inv(const FieldCtx& F, const Analysis& A, const Vertex& v) {
    if (F.p() == 2) {
        throw EvenCharacteristic("the shift by f(0,0)/2 needs odd q");
    }
    check_vertex(F, A.derived.l, v);
    const elem_t half = F.inv(2);
    ElemVec rest = v.rest;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] = F.add(rest[i], F.mul(half, A.derived.f00[i]));
    }
    return Vertex{v.first, std::move(rest)};
}

Vertex psi_map(const FieldCtx& F, const Analysis& A,
               const ComponentDescriptor& desc1,
               const ComponentDescriptor& desc2, const Vertex& v) {
    const DerivedFuncs& der = A.derived;
    const ComponentStructure& s = A.structure;
    if (desc1.parity != desc2.parity || desc1.degenerate != desc2.degenerate) {
        throw OrderMismatch("components have different orders");
    }
    if (component_of(F, A, v).key() != desc1.key()) {
        throw VertexNotInComponent("vertex lies outside the first component");
    }

    ElemVec a1 = unflatten(F, desc1.half_a);
    ElemVec a2 = unflatten(F, desc2.half_a);
    ElemVec delta = sub_vec(F, a2, a1);
    if (s.parity == Parity::Even) {
        return Vertex{v.first, add_vec(F, v.rest, delta)};
    }
    // which half: does v.rest - h(x) - a1 land in W0?
    ElemVec off = sub_vec(F, sub_vec(F, v.rest, der.h[v.first]), a1);
    if (s.W0.contains(flatten(F, off))) {
        return Vertex{v.first, add_vec(F, v.rest, delta)};
    }
    return Vertex{v.first, sub_vec(F, v.rest, delta)};
}

std::vector<Vertex> witness_path(const FieldCtx& F, const Analysis& A,
                                 const Vertex& from, const Vertex& to) {
    if (F.p() == 2) {
        throw EvenCharacteristic("walk construction covers odd q only");
    }
    const DerivedFuncs& der = A.derived;
    const ComponentStructure& s = A.structure;
    const std::uint32_t q = F.q();
    check_vertex(F, der.l, from);
    check_vertex(F, der.l, to);
    if (!same_component(F, A, from, to)) {
        throw NotSameComponent("no directed path exists between the vertices");
    }
    if (from == to) return {};

    // everything below happens in D0 = D(q; f - f(0,0)); map through phi
    const Vertex from0 = phi_map(F, A, from);
    const Vertex to0 = phi_map(F, A, to);
    auto f0 = [&](elem_t x, elem_t y) {
        ElemVec r = der.f_table[static_cast<std::size_t>(x) * q + y];
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = F.sub(r[i], der.f00[i]);
        }
        return r;
    };

    // spanning representatives: first basis-growing entries in row order
    SubspaceFp span(F.p(), s.el);
    std::vector<std::pair<elem_t, elem_t>> reps;
    std::vector<FpVec> alphas;
    for (elem_t x = 0; x < q && span.dim() < s.d; ++x) {
        for (elem_t y = 0; y < q && span.dim() < s.d; ++y) {
            FpVec cand = flatten(F, der.tilde_f0[static_cast<std::size_t>(x) * q + y]);
            if (span.extend(cand)) {
                reps.emplace_back(x, y);
                alphas.push_back(std::move(cand));
            }
        }
    }

    const ElemVec base = sub_vec(F, from0.rest, der.g[from0.first]);
    const ElemVec t = sub_vec(F, to0.rest, der.h[to0.first]);

    std::vector<Vertex> walk{from0};
    auto step = [&](elem_t next_first) {
        const Vertex& cur = walk.back();
        walk.push_back(
            Vertex{next_first, sub_vec(F, f0(cur.first, next_first), cur.rest)});
    };

    const FpVec plus_off = flatten(F, sub_vec(F, t, base));
    std::vector<coeff_t> coef;
    bool plus = s.W0.contains(plus_off);
    if (plus) {
        coef = *express_in_family(F.p(), alphas, plus_off);
        step(0);  // (0, -base); each loop below subtracts one alpha_i
    } else {
        FpVec minus_off = flatten(F, neg_vec(F, add_vec(F, t, base)));
        coef = *express_in_family(F.p(), alphas, minus_off);
        step(0);  // (0, -base)
        step(0);  // flip to (0, base); each loop below adds one alpha_i
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (coeff_t rep = 0; rep < coef[i]; ++rep) {
            if (plus) {
                step(0);
                step(reps[i].first);
                step(reps[i].second);
                step(0);
            } else {
                step(reps[i].first);
                step(reps[i].second);
                step(0);
                step(0);
            }
        }
    }
    step(to0.first);
    if (walk.back() != to0) {
        throw Error("internal", "walk construction missed its target");
    }
    for (Vertex& v : walk) v = phi_inv(F, A, v);
    return walk;
}

Partition theorem_partition(const FieldCtx& F, const Analysis& A,
                            std::uint64_t vertex_cap) {
    const std::uint64_t n =
        checked_pow_u64(F.q(), A.derived.l + 1, vertex_cap);
    std::map<std::pair<FpVec, FpVec>, std::vector<std::uint64_t>> classes;
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        Vertex v = vertex_from_index(F, A.derived.l, vi);
        classes[component_of(F, A, v).key()].push_back(vi);
    }
    Partition out;
    out.reserve(classes.size());
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

ComponentDescriptor component_of(const FieldCtx& F, const FuncSpec& f,
                                 const Vertex& v) {
    return component_of(F, analyze_full(F, f), v);
}

bool same_component(const FieldCtx& F, const FuncSpec& f, const Vertex& u,
                    const Vertex& v) {
    Analysis A = analyze_full(F, f);
    return same_component(F, A, u, v);
}

std::vector<Vertex> witness_path(const FieldCtx& F, const FuncSpec& f,
                                 const Vertex& from, const Vertex& to) {
    Analysis A = analyze_full(F, f);
    return witness_path(F, A, from, to);
}

}  // namespace fqdigraph
