#include "uso/orientation.hpp"

#include <algorithm>
#include <sstream>

namespace uso {

DenseOrientation::DenseOrientation(int n, std::vector<Mask> outmaps)
    : n_(n), out_(std::move(outmaps)) {
    check_dimension(n);
    if (out_.size() != (std::uint64_t{1} << n))
        throw InvalidOrientation("expected " + std::to_string(std::uint64_t{1} << n) +
                                 " outmaps, got " + std::to_string(out_.size()));
    Mask fm = full_mask(n);
    for (Vertex v = 0; v < out_.size(); ++v)
        if (out_[v] & ~fm)
            throw InvalidOrientation("outmap of vertex " + vertex_string(v, n) +
                                     " has bits outside dimension " + std::to_string(n));
    Edge bad;
    struct View final : Orientation {
        int n;
        const std::vector<Mask>* out;
        int dim() const override { return n; }
        Mask outmap(Vertex v) const override { return (*out)[v]; }
    } view;
    view.n = n_;
    view.out = &out_;
    if (!check_consistency(view, &bad))
        throw InvalidOrientation("inconsistent edge " + edge_string(bad, n));
}

DenseOrientation materialize(const Orientation& o) {
    int n = o.dim();
    check_dimension(n);
    std::vector<Mask> out(std::uint64_t{1} << n);
    for (Vertex v = 0; v < out.size(); ++v) out[v] = o.outmap(v);
    return DenseOrientation(n, std::move(out));
}

DenseOrientation flip(const Orientation& o, const EdgeSet& s) {
    int n = o.dim();
    check_dimension(n);
    for (const Edge& e : s) {
        if (e.dim < 1 || e.dim > n || (e.base >> n) != 0 || bit(e.base, e.dim))
            throw DimensionError("edge out of range or non-canonical in flip");
    }
    std::vector<Mask> out(std::uint64_t{1} << n);
    for (Vertex v = 0; v < out.size(); ++v) out[v] = o.outmap(v);
    for (const Edge& e : s) {
        out[e.base] ^= basis(e.dim);
        out[e.other()] ^= basis(e.dim);
    }
    return DenseOrientation(n, std::move(out));
}

DenseOrientation restrict(const Orientation& o, const Face& f) {
    int n = o.dim();
    if (f.n != n || (f.fixed_values & ~f.fixed_mask))
        throw FaceError("face does not belong to this cube");
    int k = f.dim();
    if (k < 1) throw FaceError("cannot restrict to a 0-dimensional face");
    // Spanned dimensions in increasing order become dimensions 1..k.
    std::vector<int> span;
    for (int i = 1; i <= n; ++i)
        if (!bit(f.fixed_mask, i)) span.push_back(i);
    std::vector<Mask> out(std::uint64_t{1} << k);
    for (Vertex u = 0; u < out.size(); ++u) {
        Vertex v = f.fixed_values;
        for (int j = 0; j < k; ++j)
            if (bit(u, j + 1)) v |= basis(span[j]);
        Mask big = o.outmap(v);
        Mask small = 0;
        for (int j = 0; j < k; ++j)
            if (bit(big, span[j])) small |= basis(j + 1);
        out[u] = small;
    }
    return DenseOrientation(k, std::move(out));
}

Combed is_combed(const Orientation& o, int i) {
    int n = o.dim();
    if (i < 1 || i > n) throw DimensionError("dimension out of range in is_combed");
    bool down = true, up = true;
    std::uint64_t count = std::uint64_t{1} << n;
    for (Vertex v = 0; v < count; ++v) {
        bool out_bit = bit(o.outmap(v), i);
        if (out_bit != bit(v, i)) down = false;
        if (out_bit == bit(v, i)) up = false;
        if (!down && !up) return Combed::NotCombed;
    }
    return down ? Combed::Down : Combed::Up;
}

bool is_acyclic(const Orientation& o) {
    int n = o.dim();
    if (n > N_MAX) throw ResourceError("acyclicity check requires dense materialization");
    std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Mask> out(count);
    std::vector<std::uint32_t> indeg(count, 0);
    for (Vertex v = 0; v < count; ++v) {
        out[v] = o.outmap(v);
        indeg[v] = std::uint32_t(n - popcount(out[v]));
    }
    std::vector<Vertex> queue;
    queue.reserve(count);
    for (Vertex v = 0; v < count; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::uint64_t seen = 0;
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        ++seen;
        Mask m = out[v];
        while (m) {
            int i = lowest_dim(m);
            m &= m - 1;
            Vertex w = v ^ basis(i);
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    return seen == count;
}

bool check_consistency(const Orientation& o, Edge* witness) {
    int n = o.dim();
    std::uint64_t count = std::uint64_t{1} << n;
    for (Vertex v = 0; v < count; ++v) {
        Mask mv = o.outmap(v);
        for (int i = 1; i <= n; ++i) {
            if (bit(v, i)) continue;  // visit each edge once from its base
            if (bit(mv, i) == bit(o.outmap(v ^ basis(i)), i)) {
                if (witness) *witness = Edge{v, i};
                return false;
            }
        }
    }
    return true;
}

DenseOrientation load(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("line 1: missing header");
    ++lineno;
    std::istringstream head(line);
    std::string tag;
    int n = 0;
    if (!(head >> tag >> n) || tag != "uso")
        throw ParseError("line 1: expected header 'uso <n>'");
    std::string rest;
    if (head >> rest) throw ParseError("line 1: trailing content after header");
    if (n < 1 || n > N_MAX) throw ParseError("line 1: dimension out of range");
    std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Mask> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        if (!std::getline(in, line))
            throw ParseError("line " + std::to_string(lineno + 1) + ": unexpected end of file");
        ++lineno;
        try {
            out.push_back(parse_vertex(line, n));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty())
            throw ParseError("line " + std::to_string(lineno) + ": trailing content");
    }
    return DenseOrientation(n, std::move(out));
}

std::string store(const Orientation& o) {
    int n = o.dim();
    check_dimension(n);
    std::string text = "uso " + std::to_string(n) + "\n";
    std::uint64_t count = std::uint64_t{1} << n;
    for (Vertex v = 0; v < count; ++v) {
        text += vertex_string(o.outmap(v), n);
        text += '\n';
    }
    return text;
}

EdgeSet load_edge_set(const std::string& text, int n) {
    EdgeSet s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string bits;
        int d = 0;
        std::string rest;
        if (!(ls >> bits >> d) || (ls >> rest))
            throw ParseError("line " + std::to_string(lineno) + ": expected '<base-bits> <dim>'");
        Vertex base;
        try {
            base = parse_vertex(bits, n);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (d < 1 || d > n)
            throw ParseError("line " + std::to_string(lineno) + ": dimension out of range");
        if (bit(base, d))
            throw ParseError("line " + std::to_string(lineno) + ": base not canonical");
        s.insert(Edge{base, d});
    }
    return s;
}

std::string store_edge_set(const EdgeSet& s, int n) {
    std::vector<Edge> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    std::string text;
    for (const Edge& e : sorted)
        text += vertex_string(e.base, n) + " " + std::to_string(e.dim) + "\n";
    return text;
}

}  // namespace uso
