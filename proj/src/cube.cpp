#include "uso/cube.hpp"

namespace uso {

void check_dimension(int n) {
    if (n < 1 || n > N_MAX)
        throw DimensionError("dimension " + std::to_string(n) + " out of range [1, " +
                             std::to_string(N_MAX) + "]");
}

std::uint64_t face_count(int n) {
    check_dimension(n);
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c *= 3;
    return c;
}

// Faces correspond to words in {0,1,*}^n.  Lexicographic order with
// 0 < 1 < * and position 1 compared first is counting in base 3 with
// digit 2 = '*' and position 1 as the most significant digit.
Face face_at(int n, std::uint64_t code) {
    Face f;
    f.n = n;
    std::uint64_t rest = code;
    for (int i = n; i >= 1; --i) {  // position i gets less significant as i grows
        int digit = int(rest % 3);
        rest /= 3;
        if (digit != 2) {
            f.fixed_mask |= basis(i);
            if (digit == 1) f.fixed_values |= basis(i);
        }
    }
    return f;
}

void for_each_face(int n, const std::function<void(const Face&)>& fn) {
    std::uint64_t total = face_count(n);
    for (std::uint64_t code = 0; code < total; ++code) fn(face_at(n, code));
}

std::vector<Face> faces(int n) {
    std::vector<Face> out;
    out.reserve(face_count(n));
    for_each_face(n, [&](const Face& f) { out.push_back(f); });
    return out;
}

std::pair<Vertex, Vertex> face_extremes(const Face& f) {
    Vertex mn = f.fixed_values;
    Vertex mx = f.fixed_values | f.free_mask();
    return {mn, mx};
}

std::vector<Edge> neighbors_in_Ni(const Edge& e, int n) {
    std::vector<Edge> out;
    out.reserve(n - 1);
    for (int j = 1; j <= n; ++j) {
        if (j == e.dim) continue;
        out.push_back(edge_canonical(e.base ^ basis(j), e.dim));
    }
    return out;
}

std::string vertex_string(Vertex v, int n) {
    std::string s(n, '0');
    for (int i = 1; i <= n; ++i)
        if (bit(v, i)) s[i - 1] = '1';
    return s;
}

std::string face_string(const Face& f) {
    std::string s(f.n, '*');
    for (int i = 1; i <= f.n; ++i)
        if (bit(f.fixed_mask, i)) s[i - 1] = bit(f.fixed_values, i) ? '1' : '0';
    return s;
}

std::string edge_string(const Edge& e, int n) {
    return vertex_string(e.base, n) + ":" + std::to_string(e.dim);
}

Vertex parse_vertex(const std::string& s, int n) {
    if (int(s.size()) != n)
        throw ParseError("vertex '" + s + "' has length " + std::to_string(s.size()) +
                         ", expected " + std::to_string(n));
    Vertex v = 0;
    for (int i = 1; i <= n; ++i) {
        char c = s[i - 1];
        if (c == '1')
            v |= basis(i);
        else if (c != '0')
            throw ParseError("vertex '" + s + "': invalid character '" + std::string(1, c) + "'");
    }
    return v;
}

Face parse_face(const std::string& s) {
    int n = int(s.size());
    check_dimension(n);
    Face f;
    f.n = n;
    for (int i = 1; i <= n; ++i) {
        char c = s[i - 1];
        if (c == '*') continue;
        if (c != '0' && c != '1')
            throw ParseError("face '" + s + "': invalid character '" + std::string(1, c) + "'");
        f.fixed_mask |= basis(i);
        if (c == '1') f.fixed_values |= basis(i);
    }
    return f;
}

Edge parse_edge(const std::string& s, int n) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("edge '" + s + "': expected '<bits>:<dim>'");
    Vertex base = parse_vertex(s.substr(0, colon), n);
    int dim = 0;
    try {
        dim = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("edge '" + s + "': bad dimension");
    }
    if (dim < 1 || dim > n) throw ParseError("edge '" + s + "': dimension out of range");
    if (bit(base, dim)) throw ParseError("edge '" + s + "': base not canonical (bit set)");
    return Edge{base, dim};
}

}  // namespace uso
