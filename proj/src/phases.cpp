#include "uso/phases.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace uso {

PhasePartition::PhasePartition(int n) : n_(n) {
    check_dimension(n);
    std::uint64_t count = std::uint64_t{1} << n;
    parent_.resize(n);
    size_.resize(n);
    for (int i = 0; i < n; ++i) {
        parent_[i].resize(count);
        size_[i].assign(count, 1);
        for (Vertex v = 0; v < count; ++v) parent_[i][v] = v;
    }
}

Vertex PhasePartition::root(int i, Vertex a) const {
    auto& par = parent_[i - 1];
    Vertex r = a;
    while (par[r] != r) r = par[r];
    while (par[a] != r) {  // path compression
        Vertex next = par[a];
        par[a] = r;
        a = next;
    }
    return r;
}

void PhasePartition::unite(int i, Vertex a, Vertex b) {
    a = root(i, a);
    b = root(i, b);
    if (a == b) return;
    auto& sz = size_[i - 1];
    if (sz[a] < sz[b]) std::swap(a, b);
    parent_[i - 1][b] = a;
    sz[a] += sz[b];
}

Vertex PhasePartition::find(const Edge& e) const {
    // Representative = minimal base in the class.
    Vertex r = root(e.dim, e.base);
    Vertex best = e.base;
    std::uint64_t count = std::uint64_t{1} << n_;
    Mask bi = basis(e.dim);
    for (Vertex v = 0; v < count; ++v) {
        if (v & bi) continue;
        if (v >= best) break;  // bases scanned in increasing order
        if (root(e.dim, v) == r) {
            best = v;
            break;
        }
    }
    return best;
}

bool PhasePartition::same_class(const Edge& e, const Edge& f) const {
    if (e.dim != f.dim) return false;
    return root(e.dim, e.base) == root(f.dim, f.base);
}

std::uint64_t PhasePartition::class_count(int i) const {
    std::uint64_t count = std::uint64_t{1} << n_;
    Mask bi = basis(i);
    std::uint64_t classes = 0;
    for (Vertex v = 0; v < count; ++v)
        if (!(v & bi) && root(i, v) == v) ++classes;
    return classes;
}

std::uint64_t PhasePartition::total_class_count() const {
    std::uint64_t total = 0;
    for (int i = 1; i <= n_; ++i) total += class_count(i);
    return total;
}

std::vector<Edge> PhasePartition::class_members(const Edge& e) const {
    std::vector<Edge> out;
    Vertex r = root(e.dim, e.base);
    std::uint64_t count = std::uint64_t{1} << n_;
    Mask bi = basis(e.dim);
    for (Vertex v = 0; v < count; ++v)
        if (!(v & bi) && root(e.dim, v) == r) out.push_back(Edge{v, e.dim});
    return out;
}

std::vector<std::vector<Edge>> PhasePartition::classes(int i) const {
    std::map<Vertex, std::vector<Edge>> by_root;  // keyed by minimal base
    std::uint64_t count = std::uint64_t{1} << n_;
    Mask bi = basis(i);
    std::unordered_map<Vertex, Vertex> rep;  // union-find root -> minimal base
    for (Vertex v = 0; v < count; ++v) {
        if (v & bi) continue;
        Vertex r = root(i, v);
        auto it = rep.find(r);
        if (it == rep.end()) it = rep.emplace(r, v).first;  // bases ascend, first is minimal
        by_root[it->second].push_back(Edge{v, i});
    }
    std::vector<std::vector<Edge>> out;
    out.reserve(by_root.size());
    for (auto& [_, cls] : by_root) out.push_back(std::move(cls));
    return out;
}

bool operator==(const PhasePartition& a, const PhasePartition& b) {
    if (a.n_ != b.n_) return false;
    std::uint64_t count = std::uint64_t{1} << a.n_;
    for (int i = 1; i <= a.n_; ++i) {
        Mask bi = basis(i);
        // Compare canonical labelings: map each union-find root to the
        // first base encountered, which is the class minimum.
        std::unordered_map<Vertex, Vertex> la, lb;
        for (Vertex v = 0; v < count; ++v) {
            if (v & bi) continue;
            Vertex ra = a.root(i, v), rb = b.root(i, v);
            auto ia = la.find(ra), ib = lb.find(rb);
            Vertex ca = (ia == la.end()) ? (la[ra] = v) : ia->second;
            Vertex cb = (ib == lb.end()) ? (lb[rb] = v) : ib->second;
            if (ca != cb) return false;
        }
    }
    return true;
}

std::string store_phases(const PhasePartition& p) {
    std::string text;
    int n = p.dim();
    for (int i = 1; i <= n; ++i) {
        auto cls = p.classes(i);
        text += "dim " + std::to_string(i) + " classes " + std::to_string(cls.size()) + "\n";
        for (const auto& c : cls) {
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k) text += ' ';
                text += edge_string(c[k], n);
            }
            text += '\n';
        }
    }
    return text;
}

std::optional<DirectPhaseCertificate> certificate_from_pair(const Orientation& o, Vertex v,
                                                            Vertex w) {
    if (v == w) throw ArgumentError("certificate_from_pair requires distinct vertices");
    Mask d = (v ^ w) & (o.outmap(v) ^ o.outmap(w));
    if (popcount(d) != 1) return std::nullopt;
    return DirectPhaseCertificate{v, w, lowest_dim(d)};
}

bool in_direct_phase(const Orientation& o, const Edge& e, const Edge& ep) {
    if (e.dim != ep.dim) throw ArgumentError("in_direct_phase requires equal dimensions");
    if (e == ep) throw ArgumentError("in_direct_phase requires distinct edges");
    int i = e.dim;
    // The two opposing endpoint pairs lie on opposite sides of i.
    for (Vertex v : {e.base, e.other()}) {
        Vertex w = bit(v, i) ? ep.base : ep.other();
        auto cert = certificate_from_pair(o, v, w);
        if (cert && cert->i == i) return true;
    }
    return false;
}

namespace {

void require_uso(const Orientation& o) {
    UsoWitness wit;
    if (!is_uso_fast(o, &wit))
        throw NotUsoError("not a USO: face " + face_string(wit.face) + " fails at pair (" +
                          vertex_string(wit.v, o.dim()) + ", " + vertex_string(wit.w, o.dim()) +
                          ")");
}

}  // namespace

PhasePartition compute_phases_naive(const Orientation& o, std::uint64_t* pair_checks) {
    int n = o.dim();
    check_dimension(n);
    require_uso(o);
    PhasePartition p(n);
    std::uint64_t count = std::uint64_t{1} << n;
    std::uint64_t checks = 0;
    for (Vertex v = 0; v + 1 < count; ++v) {
        for (Vertex w = v + 1; w < count; ++w) {
            ++checks;
            auto cert = certificate_from_pair(o, v, w);
            if (cert) p.unite(cert->i, edge_canonical(v, cert->i).base,
                              edge_canonical(w, cert->i).base);
        }
    }
    if (pair_checks) *pair_checks = checks;
    return p;
}

PhasePartition compute_phases_fast(const Orientation& o, std::uint64_t* pair_checks, int jobs) {
    int n = o.dim();
    check_dimension(n);
    require_uso(o);
    PhasePartition p(n);
    std::uint64_t total = face_count(n);
    std::uint64_t checks = 0;
    if (jobs <= 1) {
        for (std::uint64_t code = 0; code < total; ++code) {
            Face f = face_at(n, code);
            if (f.free_mask() == 0) continue;
            auto [mn, mx] = face_extremes(f);
            ++checks;
            auto cert = certificate_from_pair(o, mn, mx);
            if (cert) p.unite(cert->i, edge_canonical(mn, cert->i).base,
                              edge_canonical(mx, cert->i).base);
        }
    } else {
        struct Union {
            int i;
            Vertex a, b;
        };
        std::vector<std::vector<Union>> found(jobs);
        std::vector<std::uint64_t> local_checks(jobs, 0);
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                std::uint64_t lo = total * t / jobs;
                std::uint64_t hi = total * (t + 1) / jobs;
                for (std::uint64_t code = lo; code < hi; ++code) {
                    Face f = face_at(n, code);
                    if (f.free_mask() == 0) continue;
                    auto [mn, mx] = face_extremes(f);
                    ++local_checks[t];
                    auto cert = certificate_from_pair(o, mn, mx);
                    if (cert)
                        found[t].push_back(Union{cert->i, edge_canonical(mn, cert->i).base,
                                                 edge_canonical(mx, cert->i).base});
                }
            });
        }
        for (auto& th : pool) th.join();
        // Union order does not affect the final partition.
        for (int t = 0; t < jobs; ++t) {
            checks += local_checks[t];
            for (const Union& u : found[t]) p.unite(u.i, u.a, u.b);
        }
    }
    if (pair_checks) *pair_checks = checks;
    return p;
}

bool is_flippable(const Orientation& o, const Edge& e) {
    return ((o.outmap(e.base) ^ o.outmap(e.other())) & ~basis(e.dim)) == 0;
}

bool in_phase(const Orientation& o, const Edge& e, const Edge& ep) {
    if (e.dim != ep.dim) throw ArgumentError("in_phase requires equal dimensions");
    PhasePartition p = compute_phases_fast(o);
    return p.same_class(e, ep);
}

bool in_phase_bfs(const Orientation& o, const Edge& e, const Edge& ep, std::uint64_t budget) {
    if (e.dim != ep.dim) throw ArgumentError("in_phase requires equal dimensions");
    if (e == ep) return true;
    int n = o.dim();
    int i = e.dim;
    std::uint64_t count = o.vertex_count();
    std::uint64_t scanned = 0;
    std::unordered_set<Vertex> visited;  // bases of visited i-edges
    std::deque<Edge> frontier;
    visited.insert(e.base);
    frontier.push_back(e);
    while (!frontier.empty()) {
        Edge cur = frontier.front();
        frontier.pop_front();
        for (Vertex v : {cur.base, cur.other()}) {
            Mask ov = o.outmap(v);
            for (Vertex w = 0; w < count; ++w) {
                if (w == v) continue;
                if (++scanned > budget)
                    throw ResourceError("in_phase search budget exceeded (" +
                                        std::to_string(budget) + " pair scans)");
                Mask d = (v ^ w) & (ov ^ o.outmap(w));
                if (popcount(d) != 1 || lowest_dim(d) != i) continue;
                Vertex base = edge_canonical(w, i).base;
                if (!visited.insert(base).second) continue;
                if (base == ep.base) return true;
                frontier.push_back(Edge{base, i});
            }
        }
    }
    (void)n;
    return false;
}

bool is_union_of_phases(const Orientation& o, const EdgeSet& s) {
    if (s.empty()) return true;
    int i = s.begin()->dim;
    for (const Edge& e : s)
        if (e.dim != i) throw ArgumentError("is_union_of_phases requires a single dimension");
    PhasePartition p = compute_phases_fast(o);
    // Every class touched by S must be entirely inside S.
    std::unordered_map<Vertex, std::uint64_t> touched;  // representative -> count in S
    for (const Edge& e : s) ++touched[p.find(e)];
    for (const auto& [rep, cnt] : touched)
        if (cnt != p.class_members(Edge{rep, i}).size()) return false;
    return true;
}

bool phase_connected_in_Ni(const PhasePartition& p, const Edge& member) {
    std::vector<Edge> cls = p.class_members(member);
    std::unordered_set<Vertex> in_class;
    for (const Edge& e : cls) in_class.insert(e.base);
    std::unordered_set<Vertex> seen{cls.front().base};
    std::deque<Edge> frontier{cls.front()};
    while (!frontier.empty()) {
        Edge cur = frontier.front();
        frontier.pop_front();
        for (const Edge& nb : neighbors_in_Ni(cur, p.dim())) {
            if (!in_class.count(nb.base) || seen.count(nb.base)) continue;
            seen.insert(nb.base);
            frontier.push_back(nb);
        }
    }
    return seen.size() == cls.size();
}

bool is_hypervertex(const Orientation& o, const Face& f) {
    int n = o.dim();
    if (f.n != n) throw FaceError("face dimension mismatch in is_hypervertex");
    Mask fixed = f.fixed_mask;
    if (fixed == full_mask(n)) return true;  // single vertex
    auto [mn, mx] = face_extremes(f);
    Mask ref = o.outmap(mn) & fixed;
    Mask free = f.free_mask();
    Vertex sub = free;
    while (true) {
        if ((o.outmap(f.fixed_values | sub) & fixed) != ref) return false;
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    (void)mx;
    return true;
}

DenseOrientation flip_matching_checked(const Orientation& o, const EdgeSet& h) {
    int n = o.dim();
    check_dimension(n);
    std::unordered_set<Vertex> endpoints;
    for (const Edge& e : h) {
        if (!endpoints.insert(e.base).second || !endpoints.insert(e.other()).second)
            throw NotAMatching("edges share vertex " + vertex_string(e.base, n));
    }
    PhasePartition p = compute_phases_fast(o);
    // Each per-dimension slice of H must be a union of classes.
    std::unordered_map<int, std::unordered_map<Vertex, std::uint64_t>> touched;
    for (const Edge& e : h) ++touched[e.dim][p.find(e)];
    bool union_of_phases = true;
    for (const auto& [i, reps] : touched)
        for (const auto& [rep, cnt] : reps)
            if (cnt != p.class_members(Edge{rep, i}).size()) union_of_phases = false;
    DenseOrientation flipped = flip(o, h);
    bool flipped_is_uso = is_uso_fast(flipped);
    if (flipped_is_uso != union_of_phases)
        throw Error("matching-flip invariant violated: flip USO=" +
                    std::to_string(flipped_is_uso) + " but union-of-phases=" +
                    std::to_string(union_of_phases));
    if (!union_of_phases) throw NotUnionOfPhases("matching is not a union of phases");
    return flipped;
}

}  // namespace uso
