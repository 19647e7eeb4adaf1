#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Hypercube combinatorics: vertices, faces, edges and the per-dimension
// edge-neighborhood graph.  Dimensions are 1-based in every public
// interface; dimension i lives in bit position i-1 of the integer
// encodings.

namespace uso {

using Vertex = std::uint32_t;
using Mask = std::uint32_t;

// Largest dimension for which dense (2^n) materialization is allowed.
inline constexpr int N_MAX = 24;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct ArgumentError : Error {
    using Error::Error;
};
struct FaceError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct InvalidOrientation : Error {
    using Error::Error;
};
struct ResourceError : Error {
    using Error::Error;
};
struct NotUsoError : Error {
    using Error::Error;
};
struct NotHypervertex : Error {
    using Error::Error;
};
struct NotAMatching : Error {
    using Error::Error;
};
struct NotUnionOfPhases : Error {
    using Error::Error;
};
struct GadgetError : Error {
    using Error::Error;
};

inline Mask basis(int dim) { return Mask{1} << (dim - 1); }

inline Mask full_mask(int n) { return (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline int popcount(Mask m) { return __builtin_popcount(m); }

// 1-based dimension of the lowest set bit.
inline int lowest_dim(Mask m) { return __builtin_ctz(m) + 1; }

inline bool bit(Mask m, int dim) { return (m >> (dim - 1)) & 1u; }

void check_dimension(int n);

// A face f in {0,1,*}^n: bit set in fixed_mask <=> the coordinate is
// fixed, with its value in fixed_values (zero on free coordinates).
struct Face {
    int n = 0;
    Mask fixed_mask = 0;
    Mask fixed_values = 0;

    Mask free_mask() const { return full_mask(n) & ~fixed_mask; }
    int dim() const { return n - popcount(fixed_mask); }
    bool contains(Vertex v) const { return (v & fixed_mask) == fixed_values; }

    friend bool operator==(const Face&, const Face&) = default;
};

// Canonical edge: base is the endpoint on the lower side of `dim`
// (bit dim of base is 0); the edge is {base, base ^ basis(dim)}.
struct Edge {
    Vertex base = 0;
    int dim = 1;

    Vertex other() const { return base ^ basis(dim); }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
        if (auto c = a.base <=> b.base; c != 0) return c;
        return a.dim <=> b.dim;
    }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        return std::hash<std::uint64_t>{}((std::uint64_t(e.base) << 6) | unsigned(e.dim));
    }
};

// Canonicalize the edge at vertex v in dimension i.
inline Edge edge_canonical(Vertex v, int i) { return Edge{v & ~basis(i), i}; }

// All faces of Q_n, in lexicographic order of the strings {0,1,*}^n
// with 0 < 1 < * and the dimension-1 character compared first.
// Throws DimensionError for n outside [1, N_MAX].
std::vector<Face> faces(int n);

// Streaming variant of faces(): calls fn on every face in the same
// order without materializing the list.
void for_each_face(int n, const std::function<void(const Face&)>& fn);

// Number of faces of Q_n, 3^n.
std::uint64_t face_count(int n);

// The face at position `code` (0-based) of the faces(n) enumeration.
Face face_at(int n, std::uint64_t code);

// (min, max) of a face: free coordinates all 0 / all 1.
std::pair<Vertex, Vertex> face_extremes(const Face& f);

// The n-1 edges sharing a 2-face with e in the neighborhood graph N_i.
std::vector<Edge> neighbors_in_Ni(const Edge& e, int n);

// Renderings: n characters, dimension 1 first.
std::string vertex_string(Vertex v, int n);
std::string face_string(const Face& f);
std::string edge_string(const Edge& e, int n);  // "<base-bits>:<dim>"

// Parsers for the renderings above; throw ParseError on bad input.
Vertex parse_vertex(const std::string& s, int n);
Face parse_face(const std::string& s);
Edge parse_edge(const std::string& s, int n);

}  // namespace uso
