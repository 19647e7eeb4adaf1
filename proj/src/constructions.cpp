#include "uso/constructions.hpp"

#include <algorithm>

#include "uso/recognition.hpp"

namespace uso {

DenseOrientation uniform(int n) {
    check_dimension(n);
    std::vector<Mask> out(std::uint64_t{1} << n);
    for (Vertex v = 0; v < out.size(); ++v) out[v] = v;
    return DenseOrientation(n, std::move(out));
}

Mask schurr_outmap(int n, Vertex v) {
    Mask m = 0;
    for (int i = 1; i < n; ++i)
        if (bit(v, i) != bit(v, i + 1)) m |= basis(i);
    if (bit(v, n)) m |= basis(n);
    return m;
}

DenseOrientation schurr(int n) {
    check_dimension(n);
    std::vector<Mask> out(std::uint64_t{1} << n);
    for (Vertex v = 0; v < out.size(); ++v) out[v] = schurr_outmap(n, v);
    return DenseOrientation(n, std::move(out));
}

DenseOrientation replace_hypervertex(const Orientation& o, const Face& f,
                                     const Orientation& inner) {
    int n = o.dim();
    if (f.n != n) throw ArgumentError("face dimension mismatch in replace_hypervertex");
    if (!is_hypervertex(o, f)) throw NotHypervertex("face " + face_string(f) + " is not a hypervertex");
    int k = f.dim();
    if (inner.dim() != k) throw ArgumentError("replacement orientation has wrong dimension");
    if (!is_uso_fast(inner)) throw NotUsoError("replacement orientation is not a USO");
    std::vector<int> span;
    for (int i = 1; i <= n; ++i)
        if (!bit(f.fixed_mask, i)) span.push_back(i);
    std::vector<Mask> out(std::uint64_t{1} << n);
    for (Vertex v = 0; v < out.size(); ++v) out[v] = o.outmap(v);
    Mask free = f.free_mask();
    Vertex sub = free;
    while (true) {
        Vertex v = f.fixed_values | sub;
        Vertex u = 0;  // coordinates of v inside f, relabeled
        for (int j = 0; j < k; ++j)
            if (bit(v, span[j])) u |= basis(j + 1);
        Mask small = inner.outmap(u);
        Mask spanned = 0;
        for (int j = 0; j < k; ++j)
            if (bit(small, j + 1)) spanned |= basis(span[j]);
        out[v] = (out[v] & ~free) | spanned;
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    return DenseOrientation(n, std::move(out));
}

DenseOrientation partial_swap(const Orientation& o, int j) {
    int n = o.dim();
    if (j < 1 || j > n) throw DimensionError("dimension out of range in partial_swap");
    if (!is_uso_fast(o)) throw NotUsoError("partial_swap requires a USO");
    std::uint64_t count = std::uint64_t{1} << n;
    Mask bj = basis(j);
    // W: lower-j-facet vertices whose j-edge points upward.
    std::vector<char> in_w(count, 0);
    for (Vertex v = 0; v < count; ++v)
        if (!(v & bj) && bit(o.outmap(v), j)) in_w[v] = 1;
    std::vector<Mask> out(count);
    for (Vertex v = 0; v < count; ++v) out[v] = o.outmap(v);
    // Swap every non-j edge induced by W with its upper counterpart.
    for (Vertex u = 0; u < count; ++u) {
        if (!in_w[u]) continue;
        for (int k = 1; k <= n; ++k) {
            if (k == j || bit(u, k)) continue;  // visit each edge once from its base
            Vertex v = u ^ basis(k);
            if (!in_w[v]) continue;
            Mask bk = basis(k);
            Vertex uu = u ^ bj, vu = v ^ bj;  // upper counterparts
            Mask tmp_u = out[u] & bk, tmp_v = out[v] & bk;
            out[u] = (out[u] & ~bk) | (out[uu] & bk);
            out[v] = (out[v] & ~bk) | (out[vu] & bk);
            out[uu] = (out[uu] & ~bk) | tmp_u;
            out[vu] = (out[vu] & ~bk) | tmp_v;
        }
    }
    return DenseOrientation(n, std::move(out));
}

namespace {

void enumerate_rec(int n, std::vector<Mask>& out, Vertex next,
                   const std::function<void(const DenseOrientation&)>& fn) {
    std::uint64_t count = std::uint64_t{1} << n;
    if (next == count) {
        fn(DenseOrientation(n, out));
        return;
    }
    Mask fm = full_mask(n);
    for (Mask cand = 0; cand <= fm; ++cand) {
        bool ok = true;
        for (Vertex prev = 0; prev < next; ++prev) {
            if (((prev ^ next) & (out[prev] ^ cand)) == 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        out[next] = cand;
        enumerate_rec(n, out, next + 1, fn);
    }
}

}  // namespace

void enumerate_usos(int n, const std::function<void(const DenseOrientation&)>& fn) {
    if (n < 1 || n > 3) throw ResourceError("exhaustive enumeration supported only for n <= 3");
    std::vector<Mask> out(std::uint64_t{1} << n, 0);
    enumerate_rec(n, out, 0, fn);
}

std::uint64_t count_usos(int n) {
    std::uint64_t c = 0;
    enumerate_usos(n, [&](const DenseOrientation&) { ++c; });
    return c;
}

DenseOrientation markov_step(const DenseOrientation& o, Rng& rng) {
    int n = o.dim();
    std::uniform_int_distribution<int> pick_dim(1, n);
    int i = pick_dim(rng);
    PhasePartition p = compute_phases_fast(o);
    EdgeSet flip_set;
    std::bernoulli_distribution coin(0.5);
    for (const auto& cls : p.classes(i)) {
        if (!coin(rng)) continue;
        for (const Edge& e : cls) flip_set.insert(e);
    }
    return flip(o, flip_set);
}

DenseOrientation sample_uniform(int n, std::uint64_t steps, std::uint64_t seed) {
    if (steps < 1) throw ArgumentError("sample_uniform requires steps >= 1");
    Rng rng(seed);
    DenseOrientation o = uniform(n);
    for (std::uint64_t s = 0; s < steps; ++s) o = markov_step(o, rng);
    return o;
}

}  // namespace uso
