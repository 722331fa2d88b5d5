#include "fqdigraph/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <queue>
#include <sstream>

#if FQDIGRAPH_HAVE_ZLIB
#include <zlib.h>
#endif

namespace fqdigraph {

void check_vertex(const FieldCtx& F, std::uint32_t l, const Vertex& v) {
    if (v.rest.size() != l) {
        throw ShapeError("vertex has " + std::to_string(v.rest.size()) +
                         " trailing coordinates, expected " +
                         std::to_string(l));
    }
    if (v.first >= F.q()) {
        throw IndexOutOfRange("vertex coordinate not below q");
    }
    for (elem_t x : v.rest) {
        if (x >= F.q()) {
            throw IndexOutOfRange("vertex coordinate not below q");
        }
    }
}

std::uint64_t vertex_index(const FieldCtx& F, const Vertex& v) {
    std::uint64_t idx = v.first;
    for (elem_t x : v.rest) idx = idx * F.q() + x;
    return idx;
}

Vertex vertex_from_index(const FieldCtx& F, std::uint32_t l,
                         std::uint64_t index) {
    Vertex v;
    v.rest.resize(l);
    for (std::uint32_t i = l; i-- > 0;) {
        v.rest[i] = static_cast<elem_t>(index % F.q());
        index /= F.q();
    }
    v.first = static_cast<elem_t>(index);
    return v;
}

bool is_arc(const FieldCtx& F, const FuncSpec& f, const Vertex& tail,
            const Vertex& head) {
    check_vertex(F, f.l, tail);
    check_vertex(F, f.l, head);
    std::vector<elem_t> val = eval_f(F, f, tail.first, head.first);
    for (std::uint32_t i = 0; i < f.l; ++i) {
        if (F.add(tail.rest[i], head.rest[i]) != val[i]) return false;
    }
    return true;
}

std::vector<Vertex> out_neighbors(const FieldCtx& F, const FuncSpec& f,
                                  const Vertex& v) {
    check_vertex(F, f.l, v);
    const std::uint32_t q = F.q();
    std::vector<Vertex> heads;
    heads.reserve(q);
    for (elem_t y1 = 0; y1 < q; ++y1) {
        std::vector<elem_t> val = eval_f(F, f, v.first, y1);
        Vertex h;
        h.first = y1;
        h.rest.resize(f.l);
        for (std::uint32_t i = 0; i < f.l; ++i) {
            h.rest[i] = F.sub(val[i], v.rest[i]);
        }
        heads.push_back(std::move(h));
    }
    return heads;
}

DigraphExplicit build_explicit(const FieldCtx& F, const FuncSpec& f,
                               std::uint64_t arc_cap) {
    const std::uint64_t q = F.q();
    std::uint64_t arcs = 1;
    for (std::uint32_t i = 0; i < f.l + 2; ++i) {
        if (arcs > arc_cap / q) {
            throw TooLarge("q^(l+2) arcs exceed the cap of " +
                           std::to_string(arc_cap));
        }
        arcs *= q;
    }
    const std::uint64_t n = arcs / q;

    DigraphExplicit g;
    g.n = n;
    g.q = static_cast<std::uint32_t>(q);
    g.l = f.l;
    g.heads.resize(arcs);

    // f values once, then per-vertex head indices arithmetically
    std::vector<std::vector<elem_t>> fval(q * q);
    for (elem_t x = 0; x < q; ++x) {
        for (elem_t y = 0; y < q; ++y) {
            fval[x * q + y] = eval_f(F, f, x, y);
        }
    }
    std::vector<std::uint64_t> indeg(n, 0);
    Vertex v;
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        v = vertex_from_index(F, f.l, vi);
        for (elem_t y1 = 0; y1 < q; ++y1) {
            const auto& val = fval[v.first * q + y1];
            std::uint64_t head = y1;
            for (std::uint32_t i = 0; i < f.l; ++i) {
                head = head * q + F.sub(val[i], v.rest[i]);
            }
            g.heads[vi * q + y1] = head;
            ++indeg[head];
        }
    }
    for (std::uint64_t vi = 0; vi < n; ++vi) {
        if (indeg[vi] != q) {
            throw Error("internal", "in-degree " + std::to_string(indeg[vi]) +
                                        " at vertex " + std::to_string(vi));
        }
    }
    return g;
}

Partition scc(const DigraphExplicit& g) {
    const std::uint64_t n = g.n;
    const std::uint32_t q = g.q;
    constexpr std::uint64_t kUnset = ~std::uint64_t{0};

    std::vector<std::uint64_t> dfs_num(n, kUnset);
    std::vector<std::uint64_t> low(n, 0);
    std::vector<std::uint64_t> comp(n, kUnset);
    std::vector<std::uint64_t> stack;       // Tarjan's vertex stack
    std::vector<std::uint8_t> on_stack(n, 0);
    std::uint64_t counter = 0;

    struct Frame {
        std::uint64_t v;
        std::uint32_t next_edge;
    };
    std::vector<Frame> call;
    std::vector<std::vector<std::uint64_t>> classes;

    for (std::uint64_t root = 0; root < n; ++root) {
        if (dfs_num[root] != kUnset) continue;
        call.push_back({root, 0});
        dfs_num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& fr = call.back();
            const std::uint64_t v = fr.v;
            if (fr.next_edge < q) {
                const std::uint64_t w = g.heads[v * q + fr.next_edge++];
                if (dfs_num[w] == kUnset) {
                    dfs_num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], dfs_num[w]);
                }
            } else {
                if (low[v] == dfs_num[v]) {
                    std::vector<std::uint64_t> cls;
                    std::uint64_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = classes.size();
                        cls.push_back(w);
                    } while (w != v);
                    std::sort(cls.begin(), cls.end());
                    classes.push_back(std::move(cls));
                }
                call.pop_back();
                if (!call.empty()) {
                    const std::uint64_t parent = call.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return classes;
}

std::uint64_t diameter(const DigraphExplicit& g) {
    if (g.n == 0) throw NotStrong("empty digraph");
    if (scc(g).size() != 1) {
        throw NotStrong("digraph is not strongly connected");
    }
    const std::uint64_t n = g.n;
    const std::uint32_t q = g.q;
    std::uint64_t best = 0;
    std::vector<std::uint64_t> dist(n);
    std::vector<std::uint64_t> fifo(n);
    for (std::uint64_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), ~std::uint64_t{0});
        std::size_t head = 0, tail = 0;
        dist[s] = 0;
        fifo[tail++] = s;
        while (head < tail) {
            const std::uint64_t v = fifo[head++];
            for (std::uint32_t k = 0; k < q; ++k) {
                const std::uint64_t w = g.heads[v * q + k];
                if (dist[w] == ~std::uint64_t{0}) {
                    dist[w] = dist[v] + 1;
                    fifo[tail++] = w;
                }
            }
        }
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

PartitionReport compare_partitions(const Partition& a, const Partition& b) {
    std::uint64_t na = 0, nb = 0;
    for (const auto& c : a) na += c.size();
    for (const auto& c : b) nb += c.size();
    if (na != nb) {
        throw GroundSetMismatch("partitions cover " + std::to_string(na) +
                                " and " + std::to_string(nb) + " vertices");
    }
    const std::uint64_t n = na;
    constexpr std::uint64_t kUnset = ~std::uint64_t{0};
    auto labels = [n, kUnset](const Partition& part) {
        std::vector<std::uint64_t> lab(n, kUnset);
        for (std::size_t i = 0; i < part.size(); ++i) {
            for (std::uint64_t v : part[i]) {
                if (v >= n || lab[v] != kUnset) {
                    throw GroundSetMismatch(
                        "partition is not a partition of [0, n)");
                }
                lab[v] = i;
            }
        }
        return lab;
    };
    std::vector<std::uint64_t> la = labels(a), lb = labels(b);

    PartitionReport rep;
    if (a == b) return rep;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
            if ((la[i] == la[j]) != (lb[i] == lb[j])) {
                rep.ok = false;
                rep.first = i;
                rep.second = j;
                std::ostringstream os;
                os << "vertices " << i << " and " << j << " are "
                   << (la[i] == la[j] ? "together" : "apart")
                   << " in the first partition and "
                   << (lb[i] == lb[j] ? "together" : "apart")
                   << " in the second";
                rep.detail = os.str();
                return rep;
            }
        }
    }
    return rep;  // same equivalence relation, classes listed differently
}

void write_dot(const DigraphExplicit& g, std::ostream& out) {
    out << "digraph {\n";
    for (std::uint64_t v = 0; v < g.n; ++v) {
        for (std::uint32_t k = 0; k < g.q; ++k) {
            out << v << " -> " << g.heads[v * g.q + k] << ";\n";
        }
    }
    out << "}\n";
}

void save_dot(const DigraphExplicit& g, const std::string& path, bool gz) {
    if (!gz) {
        std::ofstream out(path);
        if (!out) throw IoError("cannot open " + path);
        write_dot(g, out);
        if (!out.good()) throw IoError("write failed for " + path);
        return;
    }
#if FQDIGRAPH_HAVE_ZLIB
    std::ostringstream buf;
    write_dot(g, buf);
    const std::string data = buf.str();
    gzFile zf = gzopen(path.c_str(), "wb");
    if (!zf) throw IoError("cannot open " + path);
    std::size_t off = 0;
    while (off < data.size()) {
        unsigned chunk = static_cast<unsigned>(
            std::min<std::size_t>(data.size() - off, 1u << 20));
        if (gzwrite(zf, data.data() + off, chunk) != static_cast<int>(chunk)) {
            gzclose(zf);
            throw IoError("compressed write failed for " + path);
        }
        off += chunk;
    }
    if (gzclose(zf) != Z_OK) throw IoError("close failed for " + path);
#else
    throw IoError("gzip output requested but zlib support is not built in");
#endif
}

}  // namespace fqdigraph
