#pragma once

#include <cstdint>
#include <vector>

#include "fqdigraph/errors.hpp"
#include "fqdigraph/field.hpp"
#include "fqdigraph/funcspec.hpp"

namespace fqdigraph {

/// Vertex of D(q; f): first coordinate x_1 plus the remaining l coordinates,
/// all as element indices.
struct Vertex {
    elem_t first = 0;
    std::vector<elem_t> rest;
    bool operator==(const Vertex&) const = default;
    auto operator<=>(const Vertex&) const = default;
};

/// Throws unless v has exactly l coordinates after the first, all below q.
void check_vertex(const FieldCtx& F, std::uint32_t l, const Vertex& v);

/// Mixed-radix encoding with the first coordinate most significant;
/// bijection between vertices and [0, q^{l+1}).
std::uint64_t vertex_index(const FieldCtx& F, const Vertex& v);
Vertex vertex_from_index(const FieldCtx& F, std::uint32_t l,
                         std::uint64_t index);

/// Arc rule of D(q; f): tail -> head iff tail.rest + head.rest = f(tail.first,
/// head.first) componentwise.
bool is_arc(const FieldCtx& F, const FuncSpec& f, const Vertex& tail,
            const Vertex& head);

}  // namespace fqdigraph
