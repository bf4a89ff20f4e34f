#include "cellcrys/graph.hpp"

#include <deque>

namespace cellcrys {

std::optional<std::vector<int>> graph_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
    if (g1.rank != g2.rank || g1.size() != g2.size()) return std::nullopt;
    std::vector<int> map1(g1.size(), -1), map2(g2.size(), -1);
    std::deque<int> queue;
    auto labels_match = [&](int a, int b) {
        return g1.nodes[a].wt == g2.nodes[b].wt && g1.nodes[a].eps == g2.nodes[b].eps;
    };
    if (!labels_match(g1.root, g2.root)) return std::nullopt;
    map1[g1.root] = g2.root;
    map2[g2.root] = g1.root;
    queue.push_back(g1.root);
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        int b = map1[a];
        for (int i = 0; i < g1.rank; ++i) {
            int ta = g1.fedge[a][i], tb = g2.fedge[b][i];
            if ((ta < 0) != (tb < 0)) return std::nullopt;
            if (ta < 0) continue;
            if (map1[ta] >= 0 || map2[tb] >= 0) {
                if (map1[ta] != tb) return std::nullopt;
                continue;
            }
            if (!labels_match(ta, tb)) return std::nullopt;
            map1[ta] = tb;
            map2[tb] = ta;
            queue.push_back(ta);
        }
    }
    // rooted generation reaches every node through f-edges; anything unmapped
    // means the roots do not generate, reject
    for (int v : map1)
        if (v < 0) return std::nullopt;
    return map1;
}

std::vector<std::string> CrystalGraph::validate(
    const std::vector<std::vector<int>>& cartan) const {
    std::vector<std::string> bad;
    std::vector<std::vector<int>> indeg(size(), std::vector<int>(rank, 0));
    for (std::size_t v = 0; v < size(); ++v) {
        for (int i = 0; i < rank; ++i) {
            int t = fedge[v][i];
            if (t < 0) continue;
            indeg[t][i]++;
            if (indeg[t][i] > 1)
                bad.push_back("node " + std::to_string(t) + ": two incoming f_" +
                              std::to_string(i + 1) + " edges");
            // wt(f b) = wt(b) - alpha_i, eps(f b) = eps(b) + 1
            for (int j = 0; j < rank; ++j) {
                if (nodes[t].wt[j] != nodes[v].wt[j] - cartan[j][i])
                    bad.push_back("edge " + std::to_string(v) + "->" + std::to_string(t) +
                                  ": wt shift wrong");
            }
            if (nodes[t].eps[i] != nodes[v].eps[i] + TInt::of(1))
                bad.push_back("edge " + std::to_string(v) + "->" + std::to_string(t) +
                              ": eps shift wrong");
        }
    }
    return bad;
}

std::string CrystalGraph::dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t v = 0; v < size(); ++v) {
        os << "  n" << v << " [label=\"";
        for (std::size_t j = 0; j < nodes[v].wt.size(); ++j) {
            if (j) os << ",";
            os << nodes[v].wt[j];
        }
        os << "\"];\n";
    }
    for (std::size_t v = 0; v < size(); ++v)
        for (int i = 0; i < rank; ++i)
            if (fedge[v][i] >= 0)
                os << "  n" << v << " -> n" << fedge[v][i] << " [label=\"" << (i + 1) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::json() const {
    std::ostringstream os;
    os << "{\"rank\":" << rank << ",\"root\":" << root << ",\"nodes\":[";
    for (std::size_t v = 0; v < size(); ++v) {
        if (v) os << ",";
        os << "{\"wt\":[";
        for (std::size_t j = 0; j < nodes[v].wt.size(); ++j) {
            if (j) os << ",";
            os << nodes[v].wt[j];
        }
        os << "],\"eps\":[";
        for (std::size_t j = 0; j < nodes[v].eps.size(); ++j) {
            if (j) os << ",";
            if (nodes[v].eps[j].finite())
                os << nodes[v].eps[j].value();
            else
                os << "null";
        }
        os << "],\"depth\":" << nodes[v].depth
           << ",\"boundary\":" << (nodes[v].boundary ? "true" : "false") << "}";
    }
    os << "],\"fedges\":[";
    bool first = true;
    for (std::size_t v = 0; v < size(); ++v)
        for (int i = 0; i < rank; ++i)
            if (fedge[v][i] >= 0) {
                if (!first) os << ",";
                first = false;
                os << "[" << v << "," << (i + 1) << "," << fedge[v][i] << "]";
            }
    os << "]}";
    return os.str();
}

}  // namespace cellcrys
