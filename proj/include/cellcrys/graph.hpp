#pragma once

#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellcrys/basics.hpp"

namespace cellcrys {

struct GraphNode {
    std::vector<std::int64_t> wt;  // fundamental coordinates
    std::vector<TInt> eps;
    int depth = 0;
    bool boundary = false;  // f-edges truncated at this node
};

// Finite colored crystal graph; edges b ->(i) b' mean f_i b = b'. The e-edges
// are exactly the reversed f-edges (checked during generation).
struct CrystalGraph {
    int rank = 0;
    int root = 0;
    std::vector<GraphNode> nodes;
    std::vector<std::vector<int>> fedge;  // fedge[v][i-1] = target or -1

    std::size_t size() const { return nodes.size(); }
    std::string dot() const;
    std::string json() const;
    // structural invariants: unique in-edge per color, labels follow the
    // crystal axioms along every edge
    std::vector<std::string> validate(
        const std::vector<std::vector<int>>& cartan) const;
};

struct GenOpts {
    int max_f_depth = 0;        // max number of f-applications from the seed
    bool explore_e = false;     // also close under e (free-ball generation)
    std::size_t node_cap = 1000000;
};

// BFS closure of a seed element under f_i (and optionally e_i).
// During generation, every f-edge is checked to invert under e.
template <typename E>
struct Generated {
    CrystalGraph graph;
    std::vector<E> elems;
};

template <typename E>
Generated<E> generate_component(const E& seed, const GenOpts& opts) {
    struct Hash {
        std::size_t operator()(const E& x) const { return x.hash(); }
    };
    Generated<E> out;
    int rank = seed.rank();
    out.graph.rank = rank;
    std::unordered_map<E, int, Hash> index;
    std::deque<int> queue;
    auto intern = [&](const E& x, int depth) {
        auto it = index.find(x);
        if (it != index.end()) return it->second;
        check(out.elems.size() < opts.node_cap, "generate_component: node cap exceeded");
        int id = static_cast<int>(out.elems.size());
        index.emplace(x, id);
        out.elems.push_back(x);
        GraphNode node;
        node.wt = x.wt_fund();
        node.depth = depth;
        for (int i = 1; i <= rank; ++i) node.eps.push_back(x.eps(i));
        out.graph.nodes.push_back(std::move(node));
        out.graph.fedge.emplace_back(rank, -1);
        queue.push_back(id);
        return id;
    };
    intern(seed, 0);
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        E cur = out.elems[id];
        int depth = out.graph.nodes[id].depth;
        for (int i = 1; i <= rank; ++i) {
            if (depth < opts.max_f_depth) {
                auto fx = cur.f(i);
                if (fx) {
                    auto back = fx->e(i);
                    check(back && *back == cur, "generate_component: f/e not inverse");
                    int tid = intern(*fx, depth + 1);
                    out.graph.fedge[id][i - 1] = tid;
                }
            } else {
                out.graph.nodes[id].boundary = true;
            }
            if (opts.explore_e && depth < opts.max_f_depth) {
                auto ex = cur.e(i);
                if (ex) {
                    int tid = intern(*ex, depth + 1);
                    auto back = ex->f(i);
                    check(back && *back == cur, "generate_component: e/f not inverse");
                    out.graph.fedge[tid][i - 1] = id;
                }
            }
        }
    }
    return out;
}

// Label- and color-preserving rooted digraph isomorphism; both graphs are
// compared by parallel BFS from their roots. Returns the node map g1 -> g2.
std::optional<std::vector<int>> graph_isomorphic(const CrystalGraph& g1,
                                                 const CrystalGraph& g2);

// Strict-morphism report: wt/eps/phi preservation and operator commutation of
// a map Psi between element families. Violations are returned as messages.
template <typename T, typename U, typename MapFn>
std::vector<std::string> strict_morphism_check(const std::vector<T>& domain, MapFn psi,
                                               int rank) {
    std::vector<std::string> bad;
    struct HashT {
        std::size_t operator()(const T& x) const { return x.hash(); }
    };
    std::unordered_map<T, int, HashT> index;
    for (std::size_t k = 0; k < domain.size(); ++k) index.emplace(domain[k], static_cast<int>(k));
    auto complain = [&](std::size_t k, const std::string& what) {
        bad.push_back("node " + std::to_string(k) + ": " + what);
    };
    std::vector<U> images;
    images.reserve(domain.size());
    for (const auto& b : domain) images.push_back(psi(b));
    for (std::size_t k = 0; k < domain.size(); ++k) {
        const T& b = domain[k];
        const U& u = images[k];
        if (b.wt_fund() != u.wt_fund()) complain(k, "wt not preserved");
        for (int i = 1; i <= rank; ++i) {
            if (b.eps(i) != u.eps(i)) complain(k, "eps_" + std::to_string(i) + " not preserved");
            if (b.phi(i) != u.phi(i)) complain(k, "phi_" + std::to_string(i) + " not preserved");
            auto eb = b.e(i);
            auto eu = u.e(i);
            if (eb.has_value() && index.count(*eb)) {
                if (!eu)
                    complain(k, "e_" + std::to_string(i) + " image vanishes but domain acts");
                else if (!(*eu == images[index.at(*eb)]))
                    complain(k, "e_" + std::to_string(i) + " does not commute");
            } else if (!eb.has_value() && eu.has_value()) {
                complain(k, "e_" + std::to_string(i) + " acts on image but kills domain");
            }
            auto fb = b.f(i);
            auto fu = u.f(i);
            if (fb.has_value() && index.count(*fb)) {
                if (!fu)
                    complain(k, "f_" + std::to_string(i) + " image vanishes but domain acts");
                else if (!(*fu == images[index.at(*fb)]))
                    complain(k, "f_" + std::to_string(i) + " does not commute");
            }
            // f_b leaving the domain set is a truncation boundary, not checked
        }
    }
    return bad;
}

}  // namespace cellcrys
