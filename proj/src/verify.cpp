#include "fqdigraph/verify.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "fqdigraph/theorem.hpp"

namespace fqdigraph {

FuncSpec make_random_table(const FieldCtx& F, std::uint32_t l,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<elem_t>> rows(std::size_t{F.q()} * F.q());
    for (auto& row : rows) {
        row.resize(l);
        for (auto& v : row) v = static_cast<elem_t>(rng() % F.q());
    }
    return make_table_funcspec(F, rows);
}

VerifyCase verify_case(const FieldCtx& F, const FuncSpec& f,
                       std::uint64_t arc_cap, std::uint64_t vertex_cap,
                       std::uint64_t seed, bool random) {
    VerifyCase c;
    c.p = F.p();
    c.e = F.e();
    c.l = f.l;
    c.q = F.q();
    c.seed = seed;
    c.random = random;

    Analysis A = analyze_full(F, f);
    Partition got = theorem_partition(F, A, vertex_cap);
    Partition want = scc(build_explicit(F, f, arc_cap));

    PartitionReport cmp = compare_partitions(want, got);
    c.ok = cmp.ok;
    c.components = want.size();
    if (!cmp.ok) c.detail = cmp.detail;
    return c;
}

std::uint64_t case_seed(std::uint64_t master, std::uint64_t q, std::uint32_t l,
                        std::uint32_t i) {
    std::uint64_t x = master * 0x9e3779b97f4a7c15ull;
    x ^= q << 32 | std::uint64_t{l} << 20 | i;
    x ^= x >> 29;
    return x;
}

std::vector<VerifyCase> run_sweep(const SweepSpec& spec, std::uint64_t arc_cap,
                                  std::uint64_t vertex_cap, unsigned threads) {
    std::vector<FieldCtx> fields;
    fields.reserve(spec.fields.size());
    for (auto [p, e] : spec.fields) fields.emplace_back(p, e);

    struct Item {
        std::size_t field;
        std::uint32_t l;
        std::uint32_t i;
    };
    std::vector<Item> items;
    for (std::size_t fi = 0; fi < fields.size(); ++fi)
        for (std::uint32_t l : spec.ls)
            for (std::uint32_t i = 0; i < spec.per; ++i)
                items.push_back({fi, l, i});

    std::vector<VerifyCase> out(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t k = next.fetch_add(1); k < items.size();
                 k = next.fetch_add(1)) {
                const Item& it = items[k];
                const FieldCtx& F = fields[it.field];
                std::uint64_t s = case_seed(spec.seed, F.q(), it.l, it.i);
                out[k] = verify_case(F, make_random_table(F, it.l, s), arc_cap,
                                     vertex_cap, s, true);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    unsigned n = threads ? threads : std::thread::hardware_concurrency();
    if (n <= 1 || items.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace fqdigraph
