#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/planarity.hpp"

namespace latcon {

// Planar embedding of a graded lattice: per element, the left-to-right order
// of its upper and lower covers. Layers are ranks; the induced layered
// drawing must have no crossing edges.
struct PlanarEmbedding {
    FiniteLattice lattice;
    std::vector<std::vector<int>> upper_order;
    std::vector<std::vector<int>> lower_order;
};

struct EmbeddingReport {
    bool ok = true;
    std::vector<std::string> problems;
    std::vector<std::pair<Edge, Edge>> crossings;
};

namespace detail {

inline bool same_multiset(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Left-to-right positions per rank layer, derived by sweeping each layer in
// order and appending upper covers at first occurrence.
inline std::vector<std::vector<int>> layer_orders(const PlanarEmbedding& e) {
    const auto& l = e.lattice;
    const int h = l.height();
    std::vector<std::vector<int>> layers(h + 1);
    layers[0] = {l.bottom()};
    for (int r = 0; r < h; ++r) {
        std::vector<bool> seen(l.size(), false);
        for (int u : layers[r])
            for (int v : e.upper_order[u])
                if (!seen[v]) {
                    seen[v] = true;
                    layers[r + 1].push_back(v);
                }
    }
    return layers;
}

}  // namespace detail

inline EmbeddingReport validate_embedding(const PlanarEmbedding& e) {
    const auto& l = e.lattice;
    if (!l.graded()) throw not_graded();
    EmbeddingReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.problems.push_back(msg);
    };
    if (static_cast<int>(e.upper_order.size()) != l.size() ||
        static_cast<int>(e.lower_order.size()) != l.size()) {
        fail("order lists sized differently from the lattice");
        return rep;
    }
    for (int v = 0; v < l.size(); ++v) {
        if (!detail::same_multiset(e.upper_order[v], l.base().upper_covers(v)))
            fail("upper_order of " + l.id(v) + " does not list its upper covers");
        if (!detail::same_multiset(e.lower_order[v], l.base().lower_covers(v)))
            fail("lower_order of " + l.id(v) + " does not list its lower covers");
    }
    if (!rep.ok) return rep;

    auto layers = detail::layer_orders(e);
    std::vector<int> pos(l.size(), -1);
    int placed = 0;
    for (const auto& layer : layers)
        for (int i = 0; i < static_cast<int>(layer.size()); ++i) {
            pos[layer[i]] = i;
            ++placed;
        }
    if (placed != l.size()) {
        fail("layer sweep did not reach every element");
        return rep;
    }
    // order lists must be sorted by position
    for (int v = 0; v < l.size(); ++v) {
        for (size_t k = 1; k < e.upper_order[v].size(); ++k)
            if (pos[e.upper_order[v][k - 1]] >= pos[e.upper_order[v][k]])
                fail("upper_order of " + l.id(v) + " is not left-to-right");
        for (size_t k = 1; k < e.lower_order[v].size(); ++k)
            if (pos[e.lower_order[v][k - 1]] >= pos[e.lower_order[v][k]])
                fail("lower_order of " + l.id(v) + " is not left-to-right");
    }
    // crossings between consecutive layers
    const int h = l.height();
    std::vector<std::vector<Edge>> per_gap(h);
    for (auto [a, b] : l.edges()) per_gap[l.rank(a)].push_back({a, b});
    for (int r = 0; r < h; ++r) {
        const auto& ed = per_gap[r];
        for (size_t i = 0; i < ed.size(); ++i)
            for (size_t j = i + 1; j < ed.size(); ++j) {
                auto [u, a] = ed[i];
                auto [v, b] = ed[j];
                if (u == v || a == b) continue;
                if ((pos[u] < pos[v]) != (pos[a] < pos[b])) {
                    rep.crossings.push_back({ed[i], ed[j]});
                    rep.ok = false;
                }
            }
    }
    for (auto& [e1, e2] : rep.crossings)
        rep.problems.push_back("edges " + l.id(e1.first) + "<" + l.id(e1.second) + " and " +
                               l.id(e2.first) + "<" + l.id(e2.second) + " cross");
    return rep;
}

// Builds the embedding induced by explicit per-layer orders.
inline PlanarEmbedding embedding_from_layers(const FiniteLattice& l,
                                             const std::vector<std::vector<int>>& layers) {
    std::vector<int> pos(l.size(), -1);
    for (const auto& layer : layers)
        for (int i = 0; i < static_cast<int>(layer.size()); ++i) pos[layer[i]] = i;
    PlanarEmbedding e;
    e.lattice = l;
    e.upper_order.resize(l.size());
    e.lower_order.resize(l.size());
    for (int v = 0; v < l.size(); ++v) {
        e.upper_order[v] = l.base().upper_covers(v);
        e.lower_order[v] = l.base().lower_covers(v);
        auto by_pos = [&](int a, int b) { return pos[a] < pos[b]; };
        std::sort(e.upper_order[v].begin(), e.upper_order[v].end(), by_pos);
        std::sort(e.lower_order[v].begin(), e.lower_order[v].end(), by_pos);
    }
    return e;
}

// Backtracking search over per-layer left-to-right orders. Returns the first
// crossing-free layered embedding in deterministic order, if one exists.
inline std::optional<PlanarEmbedding> find_planar_embedding(const FiniteLattice& l) {
    if (!l.graded()) return std::nullopt;
    const int h = l.height();
    std::vector<std::vector<int>> by_rank(h + 1);
    for (int v = 0; v < l.size(); ++v) by_rank[l.rank(v)].push_back(v);
    std::vector<std::vector<int>> layers(h + 1);
    std::vector<int> pos(l.size(), -1);

    auto rec = [&](auto&& self, int r) -> bool {
        if (r > h) return true;
        std::vector<int>& layer = layers[r];
        std::vector<int> cand = by_rank[r];
        // choose an order of cand via permutation backtracking with crossing pruning
        std::vector<bool> used(cand.size(), false);
        auto place = [&](auto&& self2, size_t k) -> bool {
            if (k == cand.size()) return self(self, r + 1);
            for (size_t ci = 0; ci < cand.size(); ++ci) {
                if (used[ci]) continue;
                int v = cand[ci];
                // crossing check against already placed elements of this layer
                bool ok = true;
                if (r > 0) {
                    for (int w : layer) {
                        // w placed left of v: any lower cover of w right of all
                        // lower covers of v forces a crossing
                        for (int a : l.base().lower_covers(w)) {
                            for (int b : l.base().lower_covers(v)) {
                                if (a != b && pos[a] > pos[b]) {
                                    ok = false;
                                    break;
                                }
                            }
                            if (!ok) break;
                        }
                        if (!ok) break;
                    }
                }
                if (!ok) continue;
                used[ci] = true;
                layer.push_back(v);
                pos[v] = static_cast<int>(layer.size()) - 1;
                if (place(place, k + 1)) return true;
                pos[v] = -1;
                layer.pop_back();
                used[ci] = false;
            }
            return false;
        };
        return place(place, 0);
    };
    if (!rec(rec, 0)) return std::nullopt;
    auto e = embedding_from_layers(l, layers);
    return validate_embedding(e).ok ? std::optional(std::move(e)) : std::nullopt;
}

// Boundary chains of a planar embedding, split at the corners (the doubly
// irreducible boundary elements) when those exist.
struct BoundaryChains {
    std::vector<int> left, right;                      // 0 to 1 inclusive
    std::vector<int> left_di, right_di;                // doubly irreducible elements
    std::vector<int> lower_left, upper_left, lower_right, upper_right;
};

inline BoundaryChains boundary_chains(const PlanarEmbedding& e) {
    const auto& l = e.lattice;
    BoundaryChains bc;
    auto walk = [&](bool leftmost) {
        std::vector<int> chain{l.bottom()};
        int v = l.bottom();
        while (v != l.top()) {
            const auto& up = e.upper_order[v];
            v = leftmost ? up.front() : up.back();
            chain.push_back(v);
        }
        return chain;
    };
    bc.left = walk(true);
    bc.right = walk(false);
    auto doubly = [&](const std::vector<int>& chain) {
        std::vector<int> out;
        for (int v : chain)
            if (l.base().upper_covers(v).size() == 1 && l.base().lower_covers(v).size() == 1)
                out.push_back(v);
        return out;
    };
    bc.left_di = doubly(bc.left);
    bc.right_di = doubly(bc.right);
    auto split = [&](const std::vector<int>& chain, const std::vector<int>& di,
                     std::vector<int>& lower, std::vector<int>& upper) {
        if (di.size() != 1) return;
        auto it = std::find(chain.begin(), chain.end(), di[0]);
        lower.assign(chain.begin(), it + 1);
        upper.assign(it, chain.end());
    };
    split(bc.left, bc.left_di, bc.lower_left, bc.upper_left);
    split(bc.right, bc.right_di, bc.lower_right, bc.upper_right);
    return bc;
}

struct RectangularInfo {
    bool rectangular = false;
    int cornl = -1, cornr = -1;
    std::string why;
};

// Rectangular: each boundary chain has exactly one doubly-irreducible element
// and the two are complementary.
inline RectangularInfo is_rectangular(const PlanarEmbedding& e) {
    const auto& l = e.lattice;
    RectangularInfo info;
    auto bc = boundary_chains(e);
    if (bc.left_di.size() != 1 || bc.right_di.size() != 1) {
        info.why = "boundary chain lacks a unique doubly-irreducible element";
        return info;
    }
    info.cornl = bc.left_di[0];
    info.cornr = bc.right_di[0];
    if (l.join(info.cornl, info.cornr) != l.top() ||
        l.meet(info.cornl, info.cornr) != l.bottom()) {
        info.why = "corner candidates are not complementary";
        return info;
    }
    info.rectangular = true;
    return info;
}

// Patch: rectangular with both corners covered by 1.
inline bool is_patch(const PlanarEmbedding& e) {
    auto info = is_rectangular(e);
    if (!info.rectangular) throw not_rectangular();
    return e.lattice.is_cover(info.cornl, e.lattice.top()) &&
           e.lattice.is_cover(info.cornr, e.lattice.top());
}

inline bool is_sps(const PlanarEmbedding& e, std::string* why = nullptr) {
    if (!is_semimodular(e.lattice)) {
        if (why) *why = "not semimodular";
        return false;
    }
    if (!is_slim(e.lattice)) {
        if (why) *why = "not slim";
        return false;
    }
    if (!is_planar(e.lattice)) {
        if (why) *why = "not planar";
        return false;
    }
    return validate_embedding(e).ok;
}

inline bool is_sr(const PlanarEmbedding& e) {
    std::string why;
    return is_sps(e, &why) && is_rectangular(e).rectangular;
}

}  // namespace latcon
