#pragma once

#include <map>
#include <optional>
#include <vector>

#include "systo/types.hpp"

namespace systo {

/// Finite abstract simplicial complex, stored by its maximal simplices.
/// Vertex ids are dense 0..V-1 and every vertex lies in some maximal
/// simplex.  Faces, adjacency and BFS data are computed on demand and
/// memoized; the complex is immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Normalizes input (sorts simplices, drops duplicates and nested
    /// simplices) and validates the vertex-coverage invariant.
    static SimplicialComplex from_maximal(int num_vertices, std::vector<Simplex> maximal);

    int num_vertices() const { return num_vertices_; }
    int dim() const { return dim_; }
    bool empty() const { return num_vertices_ == 0; }

    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }

    /// Indices of maximal simplices containing v.
    const std::vector<int>& star(Vertex v) const { return stars_[v]; }

    bool has_simplex(const Simplex& s) const;

    /// All d-dimensional faces, deduplicated and sorted.  Throws on
    /// d outside [0, dim].
    const std::vector<Simplex>& faces(int d) const;

    /// All nonempty faces, dimension by dimension.
    std::vector<Simplex> all_faces() const;

    /// Face counts f_0..f_dim.
    std::vector<long long> f_vector() const;

    long long euler_characteristic() const;

    /// Sorted neighbor lists of the 1-skeleton.
    const std::vector<std::vector<Vertex>>& adjacency() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// BFS distances from a set of source vertices; -1 where unreachable.
    std::vector<int> bfs(const std::vector<Vertex>& sources) const;

    /// 1-skeleton distance, or nullopt when disconnected.
    std::optional<int> graph_distance(Vertex u, Vertex v) const;

private:
    int num_vertices_ = 0;
    int dim_ = -1;
    std::vector<Simplex> maximal_;
    std::vector<std::vector<int>> stars_;
    mutable std::vector<std::vector<Simplex>> faces_cache_;  // per dimension
    mutable std::vector<bool> faces_ready_;
    mutable std::vector<std::vector<Vertex>> adjacency_;
    mutable bool adjacency_ready_ = false;
};

/// Subcomplex of a parent complex, represented by its maximal generating
/// simplices; closure under faces is implicit.
struct Subcomplex {
    const SimplicialComplex* parent = nullptr;
    std::vector<Simplex> maximal;   // canonical: sorted, no nested pairs
    std::vector<Vertex> vertices;   // sorted union of the generators

    bool empty() const { return maximal.empty(); }
    int dim() const;
    bool has_vertex(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
    bool has_simplex(const Simplex& s) const;

    /// All nonempty faces of the subcomplex.
    std::vector<Simplex> all_faces() const;
    std::vector<Simplex> faces(int d) const;

    /// Validates that every generator is a simplex of the parent.
    static Subcomplex from_simplices(const SimplicialComplex& parent, std::vector<Simplex> simplices);

    /// Full span in the parent of a vertex set: the maximal subcomplex on
    /// those vertices.
    static Subcomplex span(const SimplicialComplex& parent, std::vector<Vertex> verts);

    static Subcomplex whole(const SimplicialComplex& parent);
};

/// The link X_sigma as a subcomplex of X (generated by M \ sigma over
/// maximal M containing sigma).  Throws if sigma is not a simplex of X.
Subcomplex link_of(const SimplicialComplex& X, const Simplex& sigma);

/// A subcomplex re-indexed as a standalone complex, with the vertex
/// correspondence to the parent retained.
struct ExtractedComplex {
    SimplicialComplex cx;
    std::vector<Vertex> to_parent;       // new id -> parent id
    std::map<Vertex, Vertex> from_parent;

    Simplex lift(const Simplex& parent_simplex) const;   // parent -> new ids
    Simplex lower(const Simplex& local_simplex) const;   // new -> parent ids
};

ExtractedComplex extract(const Subcomplex& sub);

/// Connected components of the 1-skeleton of a subcomplex, as sorted
/// vertex lists in parent labels.
std::vector<std::vector<Vertex>> connected_components(const Subcomplex& sub);

inline bool is_connected(const Subcomplex& sub) { return connected_components(sub).size() <= 1; }

/// Prunes duplicates and nested simplices from a generator list (helper
/// shared by complex and subcomplex normalization).
std::vector<Simplex> prune_nested(std::vector<Simplex> simplices);

}  // namespace systo
