#include "systo/io.hpp"

#include <fstream>
#include <sstream>

namespace systo {

nlohmann::json complex_to_json(const SimplicialComplex& X) {
    nlohmann::json j;
    j["dim"] = X.dim();
    j["num_vertices"] = X.num_vertices();
    j["maximal_simplices"] = X.maximal_simplices();
    return j;
}

LoadResult complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num_vertices") || !j.contains("maximal_simplices"))
        throw InvalidInput("complex JSON must carry num_vertices and maximal_simplices");
    int V = j.at("num_vertices").get<int>();
    if (V < 0) throw InvalidInput("negative num_vertices");
    std::vector<Simplex> maximal;
    for (const auto& item : j.at("maximal_simplices")) {
        Simplex s = item.get<Simplex>();
        maximal.push_back(make_simplex(std::move(s)));  // repeated vertex -> error
    }
    size_t given = maximal.size();
    LoadResult out;
    out.cx = SimplicialComplex::from_maximal(V, std::move(maximal));
    out.duplicates_dropped = int(given - out.cx.maximal_simplices().size());
    if (j.contains("dim") && j.at("dim").get<int>() != out.cx.dim())
        throw InvalidInput("declared dim " + std::to_string(j.at("dim").get<int>()) +
                           " does not match computed dim " + std::to_string(out.cx.dim()));
    return out;
}

LoadResult load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return complex_from_json(j);
}

void save_complex(const SimplicialComplex& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    out << complex_to_json(X).dump(2) << "\n";
}

std::string dot_skeleton(const SimplicialComplex& X, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < X.num_vertices(); ++v) out << "  " << v << ";\n";
    const auto& adj = X.adjacency();
    for (Vertex u = 0; u < X.num_vertices(); ++u)
        for (Vertex w : adj[u])
            if (u < w) out << "  " << u << " -- " << w << ";\n";
    out << "}\n";
    return out.str();
}

std::string string_content_hash(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_content_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return string_content_hash(ss.str());
}

}  // namespace systo
