#include "uso/recognition.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace uso {

std::uint64_t count_sinks(const Orientation& o, const Face& f) {
    int n = o.dim();
    if (f.n != n) throw FaceError("face dimension mismatch in count_sinks");
    Mask free = f.free_mask();
    std::uint64_t sinks = 0;
    // Enumerate the vertices of f: fixed values plus every subset of
    // the free coordinates.
    Vertex sub = free;
    while (true) {
        Vertex v = f.fixed_values | sub;
        if ((o.outmap(v) & free) == 0) ++sinks;
        if (sub == 0) break;
        sub = (sub - 1) & free;  // next subset of free, descending
    }
    return sinks;
}

bool is_uso_naive(const Orientation& o, std::uint64_t* pair_checks) {
    int n = o.dim();
    check_dimension(n);
    std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Mask> out(count);
    for (Vertex v = 0; v < count; ++v) out[v] = o.outmap(v);
    std::uint64_t checks = 0;
    bool ok = true;
    for (Vertex v = 0; v + 1 < count && ok; ++v) {
        for (Vertex w = v + 1; w < count; ++w) {
            ++checks;
            if (((v ^ w) & (out[v] ^ out[w])) == 0) {
                ok = false;
                break;
            }
        }
    }
    if (pair_checks) *pair_checks = checks;
    return ok;
}

namespace {

// Check one face's min/max pair; true = passes (or 0-dimensional).
bool face_passes(const Orientation& o, const Face& f) {
    Mask free = f.free_mask();
    if (free == 0) return true;
    auto [mn, mx] = face_extremes(f);
    return (free & (o.outmap(mn) ^ o.outmap(mx))) != 0;
}

}  // namespace

bool is_uso_fast(const Orientation& o, UsoWitness* witness, std::uint64_t* pair_checks,
                 int jobs) {
    int n = o.dim();
    check_dimension(n);
    std::uint64_t total = face_count(n);
    if (jobs <= 1) {
        std::uint64_t checks = 0;
        for (std::uint64_t code = 0; code < total; ++code) {
            Face f = face_at(n, code);
            if (f.free_mask() == 0) continue;
            ++checks;
            if (!face_passes(o, f)) {
                if (witness) {
                    auto [mn, mx] = face_extremes(f);
                    *witness = UsoWitness{f, mn, mx};
                }
                if (pair_checks) *pair_checks = checks;
                return false;
            }
        }
        if (pair_checks) *pair_checks = checks;
        return true;
    }

    // Parallel sweep: each worker finds the earliest failing face in
    // its chunk; the global answer is the minimum across chunks, so
    // output does not depend on the number of jobs.
    std::uint64_t worst = total;
    std::atomic<std::uint64_t> first_fail{worst};
    std::atomic<std::uint64_t> checks{0};
    int workers = jobs;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            std::uint64_t lo = total * t / workers;
            std::uint64_t hi = total * (t + 1) / workers;
            std::uint64_t local_checks = 0;
            for (std::uint64_t code = lo; code < hi; ++code) {
                if (first_fail.load(std::memory_order_relaxed) < lo) break;
                Face f = face_at(n, code);
                if (f.free_mask() == 0) continue;
                ++local_checks;
                if (!face_passes(o, f)) {
                    std::uint64_t cur = first_fail.load();
                    while (code < cur && !first_fail.compare_exchange_weak(cur, code)) {
                    }
                    break;
                }
            }
            checks += local_checks;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t fail = first_fail.load();
    if (pair_checks) *pair_checks = checks.load();
    if (fail == worst) return true;
    if (witness) {
        Face f = face_at(n, fail);
        auto [mn, mx] = face_extremes(f);
        *witness = UsoWitness{f, mn, mx};
    }
    return false;
}

bool is_puso(const Orientation& o) {
    int n = o.dim();
    check_dimension(n);
    Face full{n, 0, 0};
    if (count_sinks(o, full) == 1) return false;
    bool ok = true;
    for_each_face(n, [&](const Face& f) {
        if (!ok || f.fixed_mask == 0) return;
        if (count_sinks(o, f) != 1) ok = false;
    });
    return ok;
}

}  // namespace uso
