#include "systo/builder.hpp"

#include <random>

namespace systo {

Disc build_disc(const DiscSpec& spec) {
    if (spec.min_degree < 6)
        throw InvalidInput("disc degree below 6 is not constructible by annulus layering");
    if (spec.radius < 1) throw InvalidInput("disc radius must be >= 1");

    std::mt19937_64 rng(spec.seed.value_or(0));
    auto pick_degree = [&]() {
        return spec.seed ? spec.min_degree + int(rng() & 1u) : spec.min_degree;
    };

    std::vector<int> target;       // per vertex, assigned at creation
    std::vector<int> below;        // neighbors in the previous layer
    auto new_vertex = [&](int below_count) {
        target.push_back(pick_degree());
        below.push_back(below_count);
        return Vertex(target.size() - 1);
    };

    std::vector<Simplex> triangles;
    auto tri = [&](Vertex a, Vertex b, Vertex c) { triangles.push_back(make_simplex({a, b, c})); };

    Disc disc;
    disc.radius = spec.radius;
    disc.min_degree = spec.min_degree;
    disc.base = new_vertex(0);
    disc.layers.push_back({disc.base});

    // First annulus: the base link, a cycle of length = base target degree.
    int d0 = target[disc.base];
    std::vector<Vertex> cycle;
    for (int j = 0; j < d0; ++j) cycle.push_back(new_vertex(1));
    for (int j = 0; j < d0; ++j) tri(disc.base, cycle[j], cycle[(j + 1) % d0]);
    disc.layers.push_back(cycle);

    for (int i = 1; i < spec.radius; ++i) {
        const std::vector<Vertex>& cur = disc.layers[i];
        int L = int(cur.size());
        // one shared vertex per edge of the current cycle: the outward
        // triangle over that edge
        std::vector<Vertex> shared(L);
        for (int j = 0; j < L; ++j) shared[j] = new_vertex(2);
        // fans: each vertex reaches its target degree with fresh vertices
        // strictly between its two shared neighbors
        std::vector<Vertex> next;
        for (int j = 0; j < L; ++j) {
            Vertex u = cur[j];
            int fresh = target[u] - 4 - below[u];
            if (fresh < 0)
                throw InvalidInput("degree " + std::to_string(target[u]) +
                                   " unreachable at an annulus vertex");
            std::vector<Vertex> arc;
            arc.push_back(shared[(j + L - 1) % L]);
            for (int t = 0; t < fresh; ++t) {
                Vertex w = new_vertex(1);
                arc.push_back(w);
                next.push_back(w);
            }
            arc.push_back(shared[j]);
            next.push_back(shared[j]);
            for (size_t t = 0; t + 1 < arc.size(); ++t) tri(u, arc[t], arc[t + 1]);
            tri(u, cur[(j + 1) % L], shared[j]);
        }
        disc.layers.push_back(std::move(next));
    }

    disc.cx = SimplicialComplex::from_maximal(int(target.size()), std::move(triangles));

    // interior vertices must have hit their targets exactly
    const auto& adj = disc.cx.adjacency();
    for (int i = 0; i < spec.radius; ++i)
        for (Vertex v : disc.layers[i])
            if (int(adj[v].size()) != target[v])
                throw std::logic_error("disc construction broke the degree invariant");
    return disc;
}

namespace {

void bron_kerbosch(const std::vector<uint32_t>& adj, uint32_t R, uint32_t P, uint32_t X,
                   std::vector<Simplex>& out) {
    if (P == 0 && X == 0) {
        Simplex clique;
        for (int v = 0; v < 32; ++v)
            if (R & (1u << v)) clique.push_back(v);
        if (!clique.empty()) out.push_back(std::move(clique));
        return;
    }
    uint32_t PX = P | X;
    int pivot = __builtin_ctz(PX);
    uint32_t candidates = P & ~adj[pivot];
    while (candidates) {
        int v = __builtin_ctz(candidates);
        candidates &= candidates - 1;
        bron_kerbosch(adj, R | (1u << v), P & adj[v], X & adj[v], out);
        P &= ~(1u << v);
        X |= 1u << v;
    }
}

}  // namespace

SimplicialComplex random_small_complex(int num_vertices, double density, uint64_t seed) {
    if (num_vertices < 0 || num_vertices > 30)
        throw InvalidInput("random_small_complex supports up to 30 vertices");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<uint32_t> adj(size_t(num_vertices), 0);
    for (int u = 0; u < num_vertices; ++u)
        for (int v = u + 1; v < num_vertices; ++v)
            if (coin(rng) < density) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
    std::vector<Simplex> cliques;
    uint32_t all = num_vertices == 0 ? 0 : (num_vertices == 32 ? ~0u : (1u << num_vertices) - 1);
    bron_kerbosch(adj, 0, all, 0, cliques);
    return SimplicialComplex::from_maximal(num_vertices, std::move(cliques));
}

}  // namespace systo
