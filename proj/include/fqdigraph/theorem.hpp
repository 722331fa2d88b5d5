#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fqdigraph/errors.hpp"
#include "fqdigraph/field.hpp"
#include "fqdigraph/fplinalg.hpp"
#include "fqdigraph/funcspec.hpp"
#include "fqdigraph/oracle.hpp"
#include "fqdigraph/vertex.hpp"

namespace fqdigraph {

constexpr std::uint64_t kDefaultCosetCap = std::uint64_t{1} << 20;

enum class Parity { Odd, Even };

/// Closed-form strong-component structure of D(q; f): the span W0 of the
/// doubly-reduced range, its dimension d, and the resulting component count
/// and order multiset, split by characteristic parity.
struct ComponentStructure {
    Parity parity = Parity::Odd;
    std::uint32_t d = 0;
    std::uint32_t el = 0;  // ambient F_p dimension e*l
    bool f00_in_W0 = true;
    bool strong = false;
    std::uint64_t count = 0;
    /// (order, multiplicity), ascending by order
    std::vector<std::pair<std::uint64_t, std::uint64_t>> orders;
    SubspaceFp W0{2, 0};
    SubspaceFp W{2, 0};  // W0 + <f(0,0)> for even q; equals W0 for odd q
};

/// Which strong component a vertex lies in, as canonical coset
/// representatives. Odd q: half_a represents v - g(u) mod W0 and half_b
/// represents -v + g(u) + f(0,0) mod W0; the component is degenerate (the
/// unique one of order p^{e+d}) when the halves coincide. Even q: half_a
/// represents v + g(u) mod W and half_b stays empty.
struct ComponentDescriptor {
    Parity parity = Parity::Odd;
    FpVec half_a;
    FpVec half_b;
    bool degenerate = false;

    /// Hashable canonical key: the two halves in sorted order.
    std::pair<FpVec, FpVec> key() const {
        if (parity == Parity::Even || half_a <= half_b) return {half_a, half_b};
        return {half_b, half_a};
    }
};

/// Analysis bundle: derived tables plus the component structure, computed
/// once and shared by the per-vertex operations.
struct Analysis {
    DerivedFuncs derived;
    ComponentStructure structure;
};

Analysis analyze_full(const FieldCtx& F, const FuncSpec& f);
ComponentStructure analyze(const FieldCtx& F, const FuncSpec& f);

ComponentDescriptor component_of(const FieldCtx& F, const Analysis& A,
                                 const Vertex& v);
bool same_component(const FieldCtx& F, const Analysis& A, const Vertex& u,
                    const Vertex& v);

/// Explicit vertex set of the described component, ascending by vertex
/// index; size matches the order predicted by the structure.
std::vector<Vertex> materialize(const FieldCtx& F, const Analysis& A,
                                const ComponentDescriptor& desc,
                                std::uint64_t cap = kDefaultCosetCap);

/// The isomorphism D(q; f) -> D(q; f - f(0,0)) for odd q:
/// (x, y) |-> (x, y - f(0,0)/2). phi_inv undoes it.
Vertex phi_map(const FieldCtx& F, const Analysis& A, const Vertex& v);
Vertex phi_inv(const FieldCtx& F, const Analysis& A, const Vertex& v);

/// The explicit isomorphism between two components of equal order: a
/// translation of the non-h part of the trailing coordinates (applied with
/// opposite signs on the two halves when q is odd).
Vertex psi_map(const FieldCtx& F, const Analysis& A,
               const ComponentDescriptor& desc1,
               const ComponentDescriptor& desc2, const Vertex& v);

/// Constructive walk from -> to inside one strong component, odd q only.
/// Every consecutive pair is an arc of D(q; f); length is at most
/// 3 + 6*d*(p-1) arcs; from == to gives the empty walk.
std::vector<Vertex> witness_path(const FieldCtx& F, const Analysis& A,
                                 const Vertex& from, const Vertex& to);

/// Groups all q^{l+1} vertex indices by component key; canonical partition
/// (classes ascending, ordered by smallest member).
Partition theorem_partition(const FieldCtx& F, const Analysis& A,
                            std::uint64_t vertex_cap = kDefaultCosetCap);

// single-shot conveniences that run the analysis internally
ComponentDescriptor component_of(const FieldCtx& F, const FuncSpec& f,
                                 const Vertex& v);
bool same_component(const FieldCtx& F, const FuncSpec& f, const Vertex& u,
                    const Vertex& v);
std::vector<Vertex> witness_path(const FieldCtx& F, const FuncSpec& f,
                                 const Vertex& from, const Vertex& to);

}  // namespace fqdigraph
