#include "robustcurve/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "robustcurve/errors.hpp"

namespace robustcurve {

EdgeListImport read_edge_list(std::istream& in) {
    EdgeListImport result;
    std::unordered_map<std::string, NodeId> ids;
    auto id_of = [&](const std::string& label) {
        const auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(ids.size()));
        if (inserted) result.labels.push_back(label);
        return it->second;
    };

    std::set<Edge> unique;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    bool saw_edge_line = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;

        std::istringstream fields(line);
        std::string a;
        std::string b;
        if (!(fields >> a >> b)) throw FormatError("expected two node labels", line_no);
        saw_edge_line = true;

        const NodeId u = id_of(a);
        const NodeId v = id_of(b);
        if (u == v) {
            ++result.self_loops_dropped;
            continue;
        }
        const auto e = make_edge(u, v);
        if (!unique.insert(e).second) {
            ++result.duplicates_dropped;
            continue;
        }
        edges.push_back(e);
    }
    if (in.bad()) throw FormatError("read failure");
    if (!saw_edge_line) throw FormatError("edge list contains no edges");

    result.graph = Graph(ids.size(), std::move(edges));
    return result;
}

EdgeListImport read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace robustcurve
