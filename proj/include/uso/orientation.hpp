#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "uso/cube.hpp"

// The orientation (outmap) abstraction, dense storage, flipping,
// restriction to faces, combedness/acyclicity checks and the text
// file formats (.uso orientation files, .eds edge-set files).

namespace uso {

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

class Orientation {
public:
    virtual ~Orientation() = default;
    virtual int dim() const = 0;
    virtual Mask outmap(Vertex v) const = 0;

    std::uint64_t vertex_count() const { return std::uint64_t{1} << dim(); }
};

// Flat array of 2^n outmap masks indexed by vertex integer.  The
// constructor validates edge consistency (each edge has exactly one
// outgoing endpoint) and throws InvalidOrientation otherwise.
class DenseOrientation final : public Orientation {
public:
    DenseOrientation(int n, std::vector<Mask> outmaps);

    int dim() const override { return n_; }
    Mask outmap(Vertex v) const override { return out_[v]; }
    const std::vector<Mask>& data() const { return out_; }

    friend bool operator==(const DenseOrientation& a, const DenseOrientation& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    int n_;
    std::vector<Mask> out_;
};

// Pure function + dimension; never caches.  Consistency is only
// checked on demand via check_consistency.
class OracleOrientation final : public Orientation {
public:
    OracleOrientation(int n, std::function<Mask(Vertex)> fn) : n_(n), fn_(std::move(fn)) {
        if (n < 1) throw DimensionError("oracle dimension must be >= 1");
    }

    int dim() const override { return n_; }
    Mask outmap(Vertex v) const override { return fn_(v); }

private:
    int n_;
    std::function<Mask(Vertex)> fn_;
};

// Materialize any orientation as a dense one (n <= N_MAX).
DenseOrientation materialize(const Orientation& o);

// O'(v)_i = O(v)_i xor [edge_canonical(v, i) in S]; an involution.
DenseOrientation flip(const Orientation& o, const EdgeSet& s);

// Restriction to a face, spanned dimensions relabeled increasingly.
DenseOrientation restrict(const Orientation& o, const Face& f);

enum class Combed { Down, Up, NotCombed };

Combed is_combed(const Orientation& o, int i);

// True iff the digraph with arcs v -> v^i whenever O(v)_i = 1 is
// acyclic (iterative Kahn ordering; no recursion).
bool is_acyclic(const Orientation& o);

// True iff O(v)_i != O(v^i)_i for all v, i.  On failure, if `witness`
// is non-null it receives the first violating edge.
bool check_consistency(const Orientation& o, Edge* witness = nullptr);

// .uso text format: "uso <n>" then 2^n lines; line k is the outmap of
// vertex k, n characters, dimension 1 first.
DenseOrientation load(const std::string& text);
std::string store(const Orientation& o);

// .eds text format: one canonical edge "<base-bits> <dim>" per line.
EdgeSet load_edge_set(const std::string& text, int n);
std::string store_edge_set(const EdgeSet& s, int n);

}  // namespace uso
