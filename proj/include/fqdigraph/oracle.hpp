#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fqdigraph/errors.hpp"
#include "fqdigraph/field.hpp"
#include "fqdigraph/funcspec.hpp"
#include "fqdigraph/vertex.hpp"

namespace fqdigraph {

constexpr std::uint64_t kDefaultArcCap = 10'000'000;

/// Explicit digraph with fixed out-degree q: heads[v*q + k] is the k-th
/// out-neighbor of vertex v, k running over the head's first coordinate.
struct DigraphExplicit {
    std::uint64_t n = 0;
    std::uint32_t q = 0;
    std::uint32_t l = 0;
    std::vector<std::uint64_t> heads;
};

/// Partition of [0, n): classes sorted ascending inside, classes ordered by
/// their smallest member.
using Partition = std::vector<std::vector<std::uint64_t>>;

/// The q out-neighbors (y1, f(v.first, y1) - v.rest), y1 in index order.
std::vector<Vertex> out_neighbors(const FieldCtx& F, const FuncSpec& f,
                                  const Vertex& v);

/// Materializes all q^{l+1} vertices and q^{l+2} arcs, verifying the
/// out-degree and in-degree regularity on the way.
DigraphExplicit build_explicit(const FieldCtx& F, const FuncSpec& f,
                               std::uint64_t arc_cap = kDefaultArcCap);

/// Strong components, iterative Tarjan.
Partition scc(const DigraphExplicit& g);

/// Max directed distance over all ordered pairs, BFS from every vertex.
/// Requires a strong digraph.
std::uint64_t diameter(const DigraphExplicit& g);

struct PartitionReport {
    bool ok = true;
    // valid when !ok: the smallest vertex pair split differently
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    std::string detail;
};

/// Equality check with a counterexample pair on mismatch.
PartitionReport compare_partitions(const Partition& a, const Partition& b);

/// One line per arc, "tail -> head;", vertices labeled by index.
void write_dot(const DigraphExplicit& g, std::ostream& out);

/// Writes DOT to a file, gzip-compressed when gz is set (".gz" paths).
void save_dot(const DigraphExplicit& g, const std::string& path, bool gz);

}  // namespace fqdigraph
