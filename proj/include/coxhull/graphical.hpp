#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxhull/permutation.hpp"

namespace coxhull {

/**
 * Simple undirected graph with 1-based vertices and a canonical sorted
 * edge list. Orientations are bit vectors over that edge order: bit 0
 * directs edge {u, v} (u < v) as u -> v, bit 1 as v -> u.
 */
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> raw) {
        SimpleGraph g;
        g.n = n;
        std::set<std::pair<int, int>> dedup;
        for (auto [u, v] : raw) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("loops are not allowed");
            dedup.emplace(std::min(u, v), std::max(u, v));
        }
        g.edges.assign(dedup.begin(), dedup.end());
        if (g.edges.size() > 64) throw std::invalid_argument("at most 64 edges are supported");
        return g;
    }

    static SimpleGraph complete(int n) {
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
        return from_edges(n, e);
    }

    static SimpleGraph cycle(int n) {
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
        e.emplace_back(n, 1);
        return from_edges(n, e);
    }

    static SimpleGraph path(int n) {
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
        return from_edges(n, e);
    }

    /// Two triangles glued along an edge.
    static SimpleGraph glued_triangles() {
        return from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    }

    /// Text: one "u v" pair per line; JSON: {"n":, "edges": [[u,v],...]}.
    static SimpleGraph load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open graph file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        size_t first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            nlohmann::json j = nlohmann::json::parse(text);
            std::vector<std::pair<int, int>> e;
            for (const auto& c : j.at("edges")) e.emplace_back(c[0].get<int>(), c[1].get<int>());
            return from_edges(j.at("n").get<int>(), e);
        }
        std::vector<std::pair<int, int>> e;
        int n = 0;
        std::istringstream lines(text);
        int u, v;
        while (lines >> u >> v) {
            e.emplace_back(u, v);
            n = std::max({n, u, v});
        }
        if (e.empty()) throw std::invalid_argument("graph file has no edges");
        return from_edges(n, e);
    }

    int edge_index(int u, int v) const {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = std::lower_bound(edges.begin(), edges.end(), key);
        if (it == edges.end() || *it != key) return -1;
        return static_cast<int>(it - edges.begin());
    }

    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
};

/// Head/tail of edge e under orientation bits.
inline std::pair<int, int> directed_edge(const SimpleGraph& g, uint64_t bits, int e) {
    auto [u, v] = g.edges[e];
    return (bits >> e) & 1 ? std::make_pair(v, u) : std::make_pair(u, v);
}

inline bool is_acyclic(const SimpleGraph& g, uint64_t bits, size_t num_edges) {
    // Kahn peeling on the first num_edges edges.
    std::vector<int> indeg(g.n + 1, 0);
    std::vector<std::vector<int>> out(g.n + 1);
    for (size_t e = 0; e < num_edges; ++e) {
        auto [from, to] = directed_edge(g, bits, static_cast<int>(e));
        out[from].push_back(to);
        ++indeg[to];
    }
    std::vector<int> stack;
    for (int v = 1; v <= g.n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int t : out[v])
            if (--indeg[t] == 0) stack.push_back(t);
    }
    return seen == g.n;
}

inline bool is_acyclic(const SimpleGraph& g, uint64_t bits) {
    return is_acyclic(g, bits, g.edges.size());
}

/// Complete enumeration in ascending bit order, by edge-at-a-time
/// backtracking with cycle pruning.
inline std::vector<uint64_t> acyclic_orientations(const SimpleGraph& g) {
    std::vector<uint64_t> out;
    const size_t m = g.edges.size();
    std::function<void(size_t, uint64_t)> rec = [&](size_t e, uint64_t bits) {
        if (e == m) {
            out.push_back(bits);
            return;
        }
        for (uint64_t d : {uint64_t(0), uint64_t(1)}) {
            uint64_t next = bits | (d << e);
            if (is_acyclic(g, next, e + 1)) rec(e + 1, next);
        }
    };
    rec(0, 0);
    return out;
}

inline bool ac_adjacent(uint64_t a, uint64_t b) { return std::popcount(a ^ b) == 1; }

/**
 * Hull of a set of orientations: every acyclic orientation agreeing with
 * the generators wherever all of them agree. For two generators this is
 * the pairwise agreement rule; more generators constrain on the common
 * agreement set.
 */
inline std::vector<uint64_t> ac_hull(const SimpleGraph& g, const std::vector<uint64_t>& all,
                                     const std::vector<uint64_t>& generators) {
    if (generators.empty()) throw std::invalid_argument("ac_hull of an empty orientation list");
    const size_t m = g.edges.size();
    const uint64_t width = m == 64 ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);
    uint64_t disagree = 0;
    for (uint64_t o : generators) disagree |= o ^ generators.front();
    uint64_t agree = width & ~disagree;
    uint64_t pattern = generators.front() & agree;
    std::vector<uint64_t> members;
    for (uint64_t o : all)
        if ((o & agree) == pattern) members.push_back(o);
    return members;
}

/**
 * Mask backend over ac(G): masks are edge-difference sets relative to the
 * first enumerated orientation, under which hulls are exactly the mask
 * intervals used everywhere else.
 */
struct AcBackend {
    SimpleGraph graph;
    std::vector<uint64_t> orientations;
    std::vector<uint64_t> masks;

    size_t size() const { return orientations.size(); }
    uint64_t inversion_mask(uint32_t i) const { return masks[i]; }
};

inline AcBackend make_ac_backend(const SimpleGraph& g) {
    AcBackend b;
    b.graph = g;
    b.orientations = acyclic_orientations(g);
    if (b.orientations.empty()) throw std::logic_error("graph has no acyclic orientation");
    b.masks.reserve(b.orientations.size());
    for (uint64_t o : b.orientations) b.masks.push_back(o ^ b.orientations.front());
    return b;
}

/// Connected components as vertex lists (singletons included).
inline std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    std::vector<int> comp(g.n + 1, 0);
    int label = 0;
    for (int start = 1; start <= g.n; ++start) {
        if (comp[start]) continue;
        comp[start] = ++label;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : g.edges) {
                int other = a == v ? b : (b == v ? a : 0);
                if (other && !comp[other]) {
                    comp[other] = label;
                    stack.push_back(other);
                }
            }
        }
    }
    std::vector<std::vector<int>> out(label);
    for (int v = 1; v <= g.n; ++v) out[comp[v] - 1].push_back(v);
    return out;
}

/// Biconnected blocks as vertex sets (each bridge is a 2-vertex block).
inline std::vector<std::vector<int>> blocks(const SimpleGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n + 1);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [u, v] = g.edges[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    std::vector<int> depth(g.n + 1, -1), low(g.n + 1, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> out;

    auto pop_block = [&](int until_edge) {
        std::set<int> verts;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(g.edges[e].first);
            verts.insert(g.edges[e].second);
            if (e == until_edge) break;
        }
        out.emplace_back(verts.begin(), verts.end());
    };

    // Iterative DFS with explicit frames.
    struct Frame {
        int v, parent_edge;
        size_t next = 0;
    };
    for (int root = 1; root <= g.n; ++root) {
        if (depth[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1}};
        depth[root] = 0;
        low[root] = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, e] = adj[f.v][f.next++];
                if (e == f.parent_edge) continue;
                if (depth[w] < 0) {
                    depth[w] = depth[f.v] + 1;
                    low[w] = depth[w];
                    edge_stack.push_back(e);
                    stack.push_back({w, e});
                } else if (depth[w] < depth[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], depth[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= depth[p]) pop_block(pe);
                }
            }
        }
    }
    return out;
}

struct ClassifyResult {
    bool good = false;
    std::string reason;
};

/**
 * A graph's orientation graph has the pairwise hull inequality exactly
 * when every biconnected block is a complete graph (then ac(G) is a
 * product of permutation flip graphs). Returns the first incomplete
 * block as the reason otherwise.
 */
inline ClassifyResult classify_good(const SimpleGraph& g) {
    for (const auto& block : blocks(g)) {
        for (size_t x = 0; x < block.size(); ++x)
            for (size_t y = x + 1; y < block.size(); ++y)
                if (!g.adjacent(block[x], block[y])) {
                    std::string verts;
                    for (size_t k = 0; k < block.size(); ++k) {
                        if (k) verts += ',';
                        verts += std::to_string(block[k]);
                    }
                    return {false, "block {" + verts + "} is not complete: missing edge " +
                                       std::to_string(block[x]) + "-" + std::to_string(block[y])};
                }
    }
    return {true, "every block is a complete graph"};
}

/**
 * Explicit bijection between permutations and acyclic orientations of the
 * complete graph: direct edge u -> v iff u precedes v in one-line order.
 * Verifies it is a graph isomorphism onto the adjacent-transposition
 * Cayley graph, edge by edge.
 */
inline bool ac_iso_check(int n) {
    if (n < 2 || n > 5) throw std::invalid_argument("ac_iso_check supports n in 2..5");
    SimpleGraph k = SimpleGraph::complete(n);
    auto orient_of = [&](const Permutation& w) {
        uint64_t bits = 0;
        for (int e = 0; e < static_cast<int>(k.edges.size()); ++e) {
            auto [u, v] = k.edges[e];
            if (w.inv(u) > w.inv(v)) bits |= uint64_t(1) << e;
        }
        return bits;
    };

    auto perms = all_permutations(n);
    auto all = acyclic_orientations(k);
    std::set<uint64_t> image;
    for (const auto& w : perms) {
        uint64_t o = orient_of(w);
        if (!is_acyclic(k, o)) return false;
        image.insert(o);
    }
    if (image.size() != perms.size() || image.size() != all.size()) return false;

    // Cayley adjacency (one adjacent transposition) must match flip
    // adjacency (one edge reversed) in both directions.
    for (size_t a = 0; a < perms.size(); ++a)
        for (size_t b = a + 1; b < perms.size(); ++b) {
            bool cayley = false;
            for (int s = 1; s < n; ++s)
                if (right_mult_gen(perms[a], s) == perms[b]) cayley = true;
            bool flip = ac_adjacent(orient_of(perms[a]), orient_of(perms[b]));
            if (cayley != flip) return false;
        }
    return true;
}

}  // namespace coxhull
