#include "systo/complex.hpp"

#include <deque>
#include <set>

namespace systo {

std::vector<Simplex> prune_nested(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    std::vector<Simplex> out;
    for (size_t i = 0; i < simplices.size(); ++i) {
        bool nested = false;
        for (size_t j = 0; j < simplices.size() && !nested; ++j)
            nested = i != j && simplices[i].size() < simplices[j].size() &&
                     is_face(simplices[i], simplices[j]);
        if (!nested) out.push_back(simplices[i]);
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_maximal(int num_vertices, std::vector<Simplex> maximal) {
    SimplicialComplex X;
    X.num_vertices_ = num_vertices;
    for (auto& s : maximal) {
        s = make_simplex(std::move(s));
        if (s.empty()) throw InvalidInput("empty simplex");
        if (s.front() < 0 || s.back() >= num_vertices)
            throw InvalidInput("vertex id out of range in simplex " + simplex_str(s));
    }
    X.maximal_ = prune_nested(std::move(maximal));

    std::vector<bool> covered(num_vertices, false);
    for (const auto& s : X.maximal_) {
        X.dim_ = std::max(X.dim_, int(s.size()) - 1);
        for (Vertex v : s) covered[v] = true;
    }
    for (int v = 0; v < num_vertices; ++v)
        if (!covered[v])
            throw InvalidInput("vertex " + std::to_string(v) + " lies in no maximal simplex");

    X.stars_.assign(num_vertices, {});
    for (int i = 0; i < int(X.maximal_.size()); ++i)
        for (Vertex v : X.maximal_[i]) X.stars_[v].push_back(i);
    X.faces_cache_.assign(size_t(X.dim_ + 1), {});
    X.faces_ready_.assign(size_t(X.dim_ + 1), false);
    return X;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
    if (s.empty()) return false;
    if (s.front() < 0 || s.back() >= num_vertices_) return false;
    for (int mi : stars_[s.front()])
        if (is_face(s, maximal_[mi])) return true;
    return false;
}

namespace {
void enumerate_subsets(const Simplex& s, int size, size_t start, Simplex& cur,
                       std::set<Simplex>& out) {
    if (int(cur.size()) == size) {
        out.insert(cur);
        return;
    }
    for (size_t i = start; i < s.size(); ++i) {
        cur.push_back(s[i]);
        enumerate_subsets(s, size, i + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
    if (d < 0 || d > dim_) throw InvalidInput("face dimension out of range: " + std::to_string(d));
    if (!faces_ready_[d]) {
        std::set<Simplex> uniq;
        Simplex cur;
        for (const auto& m : maximal_)
            if (int(m.size()) > d) enumerate_subsets(m, d + 1, 0, cur, uniq);
        faces_cache_[d].assign(uniq.begin(), uniq.end());
        faces_ready_[d] = true;
    }
    return faces_cache_[d];
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim_; ++d) {
        const auto& f = faces(d);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (int d = 0; d <= dim_; ++d) f.push_back(static_cast<long long>(faces(d).size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (int d = 0; d <= dim_; ++d, sign = -sign) chi += sign * static_cast<long long>(faces(d).size());
    return chi;
}

const std::vector<std::vector<Vertex>>& SimplicialComplex::adjacency() const {
    if (!adjacency_ready_) {
        std::vector<std::set<Vertex>> nb(num_vertices_);
        for (const auto& m : maximal_)
            for (size_t i = 0; i < m.size(); ++i)
                for (size_t j = i + 1; j < m.size(); ++j) {
                    nb[m[i]].insert(m[j]);
                    nb[m[j]].insert(m[i]);
                }
        adjacency_.assign(num_vertices_, {});
        for (int v = 0; v < num_vertices_; ++v)
            adjacency_[v].assign(nb[v].begin(), nb[v].end());
        adjacency_ready_ = true;
    }
    return adjacency_;
}

bool SimplicialComplex::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency();
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<int> SimplicialComplex::bfs(const std::vector<Vertex>& sources) const {
    const auto& adj = adjacency();
    std::vector<int> dist(num_vertices_, -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (s < 0 || s >= num_vertices_) throw InvalidInput("BFS source out of range");
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<int> SimplicialComplex::graph_distance(Vertex u, Vertex v) const {
    auto dist = bfs({u});
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

int Subcomplex::dim() const {
    int d = -1;
    for (const auto& s : maximal) d = std::max(d, int(s.size()) - 1);
    return d;
}

bool Subcomplex::has_simplex(const Simplex& s) const {
    if (s.empty()) return false;
    for (const auto& m : maximal)
        if (is_face(s, m)) return true;
    return false;
}

std::vector<Simplex> Subcomplex::all_faces() const {
    std::set<Simplex> uniq;
    Simplex cur;
    for (const auto& m : maximal)
        for (int size = 1; size <= int(m.size()); ++size)
            enumerate_subsets(m, size, 0, cur, uniq);
    return {uniq.begin(), uniq.end()};
}

std::vector<Simplex> Subcomplex::faces(int d) const {
    std::set<Simplex> uniq;
    Simplex cur;
    for (const auto& m : maximal)
        if (int(m.size()) > d) enumerate_subsets(m, d + 1, 0, cur, uniq);
    return {uniq.begin(), uniq.end()};
}

static std::vector<Vertex> vertex_union(const std::vector<Simplex>& simplices) {
    std::set<Vertex> vs;
    for (const auto& s : simplices) vs.insert(s.begin(), s.end());
    return {vs.begin(), vs.end()};
}

Subcomplex Subcomplex::from_simplices(const SimplicialComplex& parent, std::vector<Simplex> simplices) {
    for (auto& s : simplices) {
        s = make_simplex(std::move(s));
        if (!parent.has_simplex(s))
            throw InvalidInput("not a simplex of the parent complex: " + simplex_str(s));
    }
    Subcomplex sub;
    sub.parent = &parent;
    sub.maximal = prune_nested(std::move(simplices));
    sub.vertices = vertex_union(sub.maximal);
    return sub;
}

Subcomplex Subcomplex::span(const SimplicialComplex& parent, std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Simplex> gens;
    for (const auto& m : parent.maximal_simplices()) {
        Simplex inter;
        std::set_intersection(m.begin(), m.end(), verts.begin(), verts.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) gens.push_back(std::move(inter));
    }
    Subcomplex sub;
    sub.parent = &parent;
    sub.maximal = prune_nested(std::move(gens));
    sub.vertices = vertex_union(sub.maximal);
    return sub;
}

Subcomplex Subcomplex::whole(const SimplicialComplex& parent) {
    Subcomplex sub;
    sub.parent = &parent;
    sub.maximal = parent.maximal_simplices();
    sub.vertices = vertex_union(sub.maximal);
    return sub;
}

Subcomplex link_of(const SimplicialComplex& X, const Simplex& sigma) {
    if (!X.has_simplex(sigma))
        throw InvalidInput("link of a non-simplex: " + simplex_str(sigma));
    std::vector<Simplex> gens;
    for (int mi : X.star(sigma.front())) {
        const Simplex& m = X.maximal_simplices()[mi];
        if (!is_face(sigma, m)) continue;
        Simplex rest = simplex_minus(m, sigma);
        if (!rest.empty()) gens.push_back(std::move(rest));
    }
    Subcomplex sub;
    sub.parent = &X;
    sub.maximal = prune_nested(std::move(gens));
    sub.vertices = vertex_union(sub.maximal);
    return sub;
}

Simplex ExtractedComplex::lift(const Simplex& parent_simplex) const {
    Simplex out;
    out.reserve(parent_simplex.size());
    for (Vertex v : parent_simplex) {
        auto it = from_parent.find(v);
        if (it == from_parent.end())
            throw InvalidInput("vertex not in extracted complex: " + std::to_string(v));
        out.push_back(it->second);
    }
    return make_simplex(std::move(out));
}

Simplex ExtractedComplex::lower(const Simplex& local_simplex) const {
    Simplex out;
    out.reserve(local_simplex.size());
    for (Vertex v : local_simplex) out.push_back(to_parent.at(size_t(v)));
    return make_simplex(std::move(out));
}

ExtractedComplex extract(const Subcomplex& sub) {
    ExtractedComplex ex;
    ex.to_parent = sub.vertices;
    for (int i = 0; i < int(ex.to_parent.size()); ++i) ex.from_parent[ex.to_parent[i]] = i;
    std::vector<Simplex> maximal;
    maximal.reserve(sub.maximal.size());
    for (const auto& m : sub.maximal) {
        Simplex s;
        for (Vertex v : m) s.push_back(ex.from_parent[v]);
        maximal.push_back(std::move(s));
    }
    ex.cx = SimplicialComplex::from_maximal(int(ex.to_parent.size()), std::move(maximal));
    return ex;
}

std::vector<std::vector<Vertex>> connected_components(const Subcomplex& sub) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (Vertex v : sub.vertices) adj[v];
    for (const auto& m : sub.maximal)
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j) {
                adj[m[i]].push_back(m[j]);
                adj[m[j]].push_back(m[i]);
            }
    std::set<Vertex> seen;
    std::vector<std::vector<Vertex>> components;
    for (Vertex v : sub.vertices) {
        if (seen.count(v)) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> queue{v};
        seen.insert(v);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (Vertex w : adj[u])
                if (!seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

}  // namespace systo
