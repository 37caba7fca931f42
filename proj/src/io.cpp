#include "mapforge/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mapforge/error.hpp"

namespace mapforge {

using nlohmann::json;

std::string map_to_json(const RotationMap& m) {
    json j;
    j["sigma"] = std::vector<int>(m.sigma_array().begin(), m.sigma_array().end());
    j["root"] = 0;
    return j.dump();
}

RotationMap map_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(e.byte, "invalid JSON");
    }
    if (!j.is_object() || !j.contains("sigma") || !j["sigma"].is_array())
        throw MalformedInput(0, "expected object with array field 'sigma'");
    const auto& arr = j["sigma"];
    const std::size_t n = arr.size();
    std::vector<int> sigma(n);
    std::vector<char> hit(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!arr[i].is_number_integer()) throw MalformedInput(i, "sigma entry is not an integer");
        const long long s = arr[i].get<long long>();
        if (s < 0 || static_cast<std::size_t>(s) >= n || hit[s])
            throw MalformedInput(i, "sigma is not a permutation");
        hit[s] = 1;
        sigma[i] = static_cast<int>(s);
    }
    int root = 0;
    if (j.contains("root")) {
        if (!j["root"].is_number_integer()) throw MalformedInput(0, "root is not an integer");
        root = j["root"].get<int>();
    }
    return RotationMap::build(std::move(sigma), root);
}

std::string graph_to_edge_list(const SimpleGraph& g) {
    std::vector<Edge> edges = g.edges();
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << g.num_vertices() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph graph_from_edge_list(std::string_view text, bool multigraph) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw MalformedInput(1, "missing 'n m' header");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0) throw MalformedInput(line_no, "bad header");
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long k = 0; k < m; ++k) {
        if (!next_line()) throw MalformedInput(line_no + 1, "missing edge line");
        std::istringstream ls(line);
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0 || u >= n || v >= n)
            throw MalformedInput(line_no, "bad edge line");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return SimpleGraph(static_cast<int>(n), std::move(edges), multigraph);
    } catch (const Error& e) {
        throw MalformedInput(line_no, e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace mapforge
