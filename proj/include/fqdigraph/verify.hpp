#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqdigraph/funcspec.hpp"
#include "fqdigraph/oracle.hpp"
#include "fqdigraph/theorem.hpp"

namespace fqdigraph {

/// Outcome of one closed-form-vs-oracle comparison.
struct VerifyCase {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t l = 0;
    std::uint64_t q = 0;
    std::uint64_t seed = 0;
    bool random = false;  // seeded table, as opposed to a supplied function
    bool ok = false;
    std::uint64_t components = 0;
    std::string detail;  // first disagreement when !ok
};

/// Uniform random function table, every entry drawn as rng() % q from a
/// mt19937_64 stream, so a (q, l, seed) triple pins the table exactly.
FuncSpec make_random_table(const FieldCtx& F, std::uint32_t l,
                           std::uint64_t seed);

/// Compares the closed-form partition with the explicit Tarjan partition for
/// one function. Never throws on disagreement; mismatch lands in the result.
/// vertex_cap bounds the closed-form side, arc_cap the explicit build.
VerifyCase verify_case(const FieldCtx& F, const FuncSpec& f,
                       std::uint64_t arc_cap = kDefaultArcCap,
                       std::uint64_t vertex_cap = kDefaultCosetCap,
                       std::uint64_t seed = 0, bool random = false);

/// Sweep grid. Defaults cover both parity branches and, at even q, both
/// f(0,0) membership subcases.
struct SweepSpec {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
    std::vector<std::uint32_t> ls = {1, 2};
    std::uint32_t per = 25;
    std::uint64_t seed = 1;
};

/// The seed handed to case i of cell (q, l); printed next to each sweep line
/// so any failure replays without rerunning the sweep.
std::uint64_t case_seed(std::uint64_t master, std::uint64_t q, std::uint32_t l,
                        std::uint32_t i);

/// Runs the whole grid, cells in (q, l, i) order regardless of how many
/// worker threads execute them. threads = 0 picks the hardware count.
std::vector<VerifyCase> run_sweep(const SweepSpec& spec,
                                  std::uint64_t arc_cap = kDefaultArcCap,
                                  std::uint64_t vertex_cap = kDefaultCosetCap,
                                  unsigned threads = 0);

}  // namespace fqdigraph
