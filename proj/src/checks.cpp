#include "systo/checks.hpp"

#include <deque>
#include <set>

namespace systo {

CheckReport is_flag(const SimplicialComplex& X) {
    const auto& adj = X.adjacency();
    long long examined = 0;
    // Level-by-level: if every extension of a spanning d-clique by a common
    // neighbor spans, every clique spans (induction on clique size).
    for (int d = 0; d < X.dim() + 1; ++d) {
        for (const auto& sigma : X.faces(d)) {
            // candidates: common neighbors of sigma's vertices
            std::vector<Vertex> cand = adj[sigma[0]];
            for (size_t i = 1; i < sigma.size() && !cand.empty(); ++i) {
                std::vector<Vertex> next;
                std::set_intersection(cand.begin(), cand.end(), adj[sigma[i]].begin(),
                                      adj[sigma[i]].end(), std::back_inserter(next));
                cand.swap(next);
            }
            for (Vertex v : cand) {
                if (contains_vertex(sigma, v)) continue;
                ++examined;
                Simplex ext = simplex_union(sigma, {v});
                if (!X.has_simplex(ext))
                    return CheckReport::fail("is_flag", {{"clique", ext}},
                                             {{"extensions_examined", examined}});
            }
        }
    }
    return CheckReport::pass("is_flag", {{"extensions_examined", examined}});
}

namespace {

// Backtracking search for an induced cycle: grow an induced path whose
// start vertex is the cycle minimum; close over an edge back to the start.
// An appended vertex may be adjacent only to its predecessor among the
// path vertices (and to the start, exactly when closing), so any cycle
// produced is chordless.
struct CycleSearchFull {
    const std::vector<std::vector<Vertex>>& adj;
    int min_len, max_len;
    std::vector<Vertex> path;
    std::vector<bool> on_path;
    std::vector<Vertex> found;

    CycleSearchFull(const SimplicialComplex& x, int lo, int hi)
        : adj(x.adjacency()), min_len(lo), max_len(hi), on_path(size_t(x.num_vertices()), false) {}

    bool dfs() {
        Vertex s = path.front();
        Vertex u = path.back();
        for (Vertex w : adj[u]) {
            if (w <= s || on_path[w]) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size() && !chord; ++i)
                chord = std::binary_search(adj[w].begin(), adj[w].end(), path[i]);
            if (chord) continue;
            if (path.size() > 1 && std::binary_search(adj[w].begin(), adj[w].end(), s)) {
                if (int(path.size()) + 1 >= min_len) {
                    found = path;
                    found.push_back(w);
                    return true;
                }
                continue;  // triangle, or extending past w would chord to s
            }
            if (int(path.size()) + 1 < max_len) {
                path.push_back(w);
                on_path[w] = true;
                if (dfs()) return true;
                on_path[w] = false;
                path.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_cycle(const SimplicialComplex& X, int min_len,
                                                      int max_len) {
    if (min_len < 4) throw InvalidInput("induced-cycle search requires min_len >= 4");
    if (max_len < min_len || X.num_vertices() == 0) return std::nullopt;
    CycleSearchFull search(X, min_len, max_len);
    for (Vertex s = 0; s < X.num_vertices(); ++s) {
        search.path = {s};
        std::fill(search.on_path.begin(), search.on_path.end(), false);
        search.on_path[s] = true;
        if (search.dfs()) return search.found;
    }
    return std::nullopt;
}

CheckReport is_k_large(const SimplicialComplex& X, int k) {
    if (k < 4) throw InvalidInput("k-largeness requires k >= 4");
    CheckReport flag = is_flag(X);
    if (!flag.ok())
        return CheckReport::fail("is_k_large", {{"non_spanning_clique", flag.witness["clique"]}},
                                 {{"k", k}});
    if (auto cycle = find_induced_cycle(X, 4, k - 1))
        return CheckReport::fail("is_k_large", {{"induced_cycle", *cycle}},
                                 {{"k", k}, {"cycle_length", cycle->size()}});
    return CheckReport::pass("is_k_large", {{"k", k}});
}

CheckReport is_locally_k_large(const SimplicialComplex& X, int k) {
    if (k < 4) throw InvalidInput("k-largeness requires k >= 4");
    long long links = 0;
    for (const auto& sigma : X.all_faces()) {
        Subcomplex lk = link_of(X, sigma);
        if (lk.empty()) continue;
        ++links;
        ExtractedComplex ex = extract(lk);
        CheckReport r = is_k_large(ex.cx, k);
        if (!r.ok()) {
            nlohmann::json witness;
            witness["simplex"] = sigma;
            if (r.witness.contains("induced_cycle")) {
                std::vector<Vertex> cyc;
                for (Vertex v : r.witness["induced_cycle"].get<std::vector<Vertex>>())
                    cyc.push_back(ex.to_parent[size_t(v)]);
                witness["induced_cycle"] = cyc;
            } else {
                witness["link_witness"] = r.witness;
            }
            return CheckReport::fail("is_locally_k_large", witness,
                                     {{"k", k}, {"links_examined", links}});
        }
    }
    return CheckReport::pass("is_locally_k_large", {{"k", k}, {"links_examined", links}});
}

namespace {

bool chamber_graph_connected(const SimplicialComplex& X) {
    const auto& maximal = X.maximal_simplices();
    if (maximal.empty()) return false;
    size_t n = maximal[0].size();
    // adjacency: chambers sharing a codimension-one face
    std::map<Simplex, std::vector<int>> by_facet;
    for (int i = 0; i < int(maximal.size()); ++i) {
        const auto& m = maximal[i];
        for (size_t drop = 0; drop < n; ++drop) {
            Simplex facet;
            for (size_t j = 0; j < n; ++j)
                if (j != drop) facet.push_back(m[j]);
            by_facet[facet].push_back(i);
        }
    }
    std::vector<bool> seen(maximal.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    size_t reached = 1;
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        const auto& m = maximal[i];
        for (size_t drop = 0; drop < n; ++drop) {
            Simplex facet;
            for (size_t j = 0; j < n; ++j)
                if (j != drop) facet.push_back(m[j]);
            for (int other : by_facet[facet])
                if (!seen[other]) {
                    seen[other] = true;
                    ++reached;
                    queue.push_back(other);
                }
        }
    }
    return reached == maximal.size();
}

}  // namespace

CheckReport is_chamber_complex(const SimplicialComplex& X, ChamberFlags* flags) {
    ChamberFlags f;
    nlohmann::json witness;
    if (X.dim() < 1 || X.maximal_simplices().empty()) {
        witness["reason"] = "no chambers";
    } else {
        int n = X.dim();
        bool pure = true;
        for (const auto& m : X.maximal_simplices())
            if (int(m.size()) != n + 1) {
                pure = false;
                witness["non_chamber_simplex"] = m;
                break;
            }
        if (pure) {
            f.chamber = true;
            f.pseudomanifold = true;
            std::map<Simplex, int> facet_count;
            for (const auto& m : X.maximal_simplices())
                for (size_t drop = 0; drop < m.size(); ++drop) {
                    Simplex facet;
                    for (size_t j = 0; j < m.size(); ++j)
                        if (j != drop) facet.push_back(m[j]);
                    ++facet_count[facet];
                }
            for (const auto& [facet, count] : facet_count) {
                if (count < 2) {
                    if (f.chamber) witness["boundary_face"] = facet;
                    f.chamber = false;
                    f.pseudomanifold = false;
                } else if (count != 2) {
                    f.pseudomanifold = false;
                }
            }
            if (f.chamber) {
                f.gallery_connected = chamber_graph_connected(X);
                f.normal = f.gallery_connected;
                for (const auto& sigma : X.all_faces()) {
                    if (!f.normal) break;
                    Subcomplex lk = link_of(X, sigma);
                    if (lk.dim() < 1) continue;
                    ExtractedComplex ex = extract(lk);
                    if (!chamber_graph_connected(ex.cx)) {
                        f.normal = false;
                        witness["non_gallery_connected_link_of"] = sigma;
                    }
                }
            }
        }
    }
    if (flags) *flags = f;
    nlohmann::json stats = {{"chamber", f.chamber},
                            {"pseudomanifold", f.pseudomanifold},
                            {"gallery_connected", f.gallery_connected},
                            {"normal", f.normal}};
    if (f.chamber) return CheckReport::pass("is_chamber_complex", stats);
    return CheckReport::fail("is_chamber_complex", witness, stats);
}

CheckReport is_full_subcomplex(const SimplicialComplex& X, const Subcomplex& A) {
    if (A.parent != &X) throw InvalidInput("subcomplex does not belong to this complex");
    for (const auto& m : A.maximal)
        if (!X.has_simplex(m))
            throw InvalidInput("invalid subcomplex: " + simplex_str(m) + " not in parent");
    long long examined = 0;
    for (const auto& m : X.maximal_simplices()) {
        Simplex inside;
        std::set_intersection(m.begin(), m.end(), A.vertices.begin(), A.vertices.end(),
                              std::back_inserter(inside));
        if (inside.empty()) continue;
        ++examined;
        if (!A.has_simplex(inside)) {
            // shrink to a minimal failing face for a tighter witness
            Simplex witness = inside;
            bool shrunk = true;
            while (shrunk && witness.size() > 1) {
                shrunk = false;
                for (size_t drop = 0; drop < witness.size(); ++drop) {
                    Simplex sub;
                    for (size_t j = 0; j < witness.size(); ++j)
                        if (j != drop) sub.push_back(witness[j]);
                    if (!A.has_simplex(sub)) {
                        witness = sub;
                        shrunk = true;
                        break;
                    }
                }
            }
            return CheckReport::fail("is_full_subcomplex", {{"spanning_set", witness}},
                                     {{"maximal_examined", examined}});
        }
    }
    return CheckReport::pass("is_full_subcomplex", {{"maximal_examined", examined}});
}

}  // namespace systo
