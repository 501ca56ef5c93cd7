#include "systo/subdivision.hpp"

namespace systo {

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& X) {
    BarycentricSubdivision sd;
    for (int d = 0; d <= X.dim(); ++d)
        for (const auto& s : X.faces(d)) {
            sd.index[s] = int(sd.vertex_simplex.size());
            sd.vertex_simplex.push_back(s);
        }

    // Maximal chains: each permutation of a maximal simplex yields the
    // flag of its prefixes.
    std::vector<Simplex> chains;
    for (const auto& m : X.maximal_simplices()) {
        Simplex perm = m;
        std::sort(perm.begin(), perm.end());
        do {
            Simplex chain;
            Simplex prefix;
            for (Vertex v : perm) {
                prefix.push_back(v);
                Simplex sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                chain.push_back(sd.index.at(sorted));
            }
            chains.push_back(make_simplex(std::move(chain)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sd.cx = SimplicialComplex::from_maximal(int(sd.vertex_simplex.size()), std::move(chains));
    return sd;
}

}  // namespace systo
