#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "latcon/birkhoff.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

// Partition of the elements of a fixed lattice, normalized so that blocks are
// numbered by first occurrence. Whether it satisfies the substitution
// property is the producer's business; see is_congruence below.
class Congruence {
public:
    Congruence() = default;
    explicit Congruence(std::vector<int> raw_blocks) { normalize(std::move(raw_blocks)); }

    static Congruence identity(int n) {
        std::vector<int> b(n);
        std::iota(b.begin(), b.end(), 0);
        return Congruence(std::move(b));
    }
    static Congruence all(int n) { return Congruence(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(block_.size()); }
    int block(int x) const { return block_[x]; }
    int block_count() const { return blocks_; }
    bool collapses(int a, int b) const { return block_[a] == block_[b]; }
    bool collapses(const Edge& e) const { return collapses(e.first, e.second); }
    bool is_identity() const { return blocks_ == size(); }
    bool is_all() const { return blocks_ == 1; }

    // this <= other in Con L (this is the finer partition)
    bool refines(const Congruence& o) const {
        std::vector<int> img(blocks_, -1);
        for (int x = 0; x < size(); ++x) {
            int b = block_[x];
            if (img[b] < 0)
                img[b] = o.block_[x];
            else if (img[b] != o.block_[x])
                return false;
        }
        return true;
    }

    // common refinement = meet in Con L
    Congruence meet_with(const Congruence& o) const {
        std::map<std::pair<int, int>, int> pairs;
        std::vector<int> out(size());
        for (int x = 0; x < size(); ++x) {
            auto key = std::pair(block_[x], o.block_[x]);
            auto it = pairs.find(key);
            if (it == pairs.end()) it = pairs.emplace(key, static_cast<int>(pairs.size())).first;
            out[x] = it->second;
        }
        return Congruence(std::move(out));
    }

    auto operator<=>(const Congruence& o) const = default;

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(blocks_);
        for (int x = 0; x < size(); ++x) out[block_[x]].push_back(x);
        return out;
    }

private:
    void normalize(std::vector<int> raw) {
        std::map<int, int> renumber;
        block_.resize(raw.size());
        for (size_t i = 0; i < raw.size(); ++i) {
            auto it = renumber.find(raw[i]);
            if (it == renumber.end())
                it = renumber.emplace(raw[i], static_cast<int>(renumber.size())).first;
            block_[i] = it->second;
        }
        blocks_ = static_cast<int>(renumber.size());
    }

    std::vector<int> block_;
    int blocks_ = 0;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace detail

// Smallest congruence collapsing every given pair, by worklist closure: each
// successfully merged pair is replayed against every z through both tables.
// Completeness: members of one block are chained by processed pairs, so the
// substitution images are chained too.
inline Congruence congruence_generated(const FiniteLattice& l, const std::vector<Edge>& pairs) {
    const int n = l.size();
    detail::UnionFind uf(n);
    std::vector<Edge> work;
    auto push = [&](int a, int b) {
        if (uf.merge(a, b)) work.push_back({a, b});
    };
    for (auto [a, b] : pairs) push(a, b);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (int z = 0; z < n; ++z) {
            push(l.meet(x, z), l.meet(y, z));
            push(l.join(x, z), l.join(y, z));
        }
    }
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
    return Congruence(std::move(raw));
}

inline Congruence principal_congruence(const FiniteLattice& l, int a, int b) {
    if (a < 0 || b < 0 || a >= l.size() || b >= l.size())
        throw unknown_element(std::to_string(a < 0 || a >= l.size() ? a : b));
    return congruence_generated(l, {{a, b}});
}

inline Congruence principal_congruence(const FiniteLattice& l, const std::string& a,
                                       const std::string& b) {
    return principal_congruence(l, l.index_of(a), l.index_of(b));
}

inline bool is_congruence(const FiniteLattice& l, const Congruence& c) {
    const int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!c.collapses(x, y)) continue;
            for (int z = 0; z < n; ++z) {
                if (!c.collapses(l.meet(x, z), l.meet(y, z))) return false;
                if (!c.collapses(l.join(x, z), l.join(y, z))) return false;
            }
        }
    return true;
}

// All congruences by brute force over set partitions; test oracle.
inline std::vector<Congruence> all_congruences_bruteforce(const FiniteLattice& l) {
    const int n = l.size();
    if (n > 12) throw size_guard_exceeded("brute-force congruence enumeration capped at 12");
    std::vector<Congruence> out;
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == n) {
            Congruence c(assign);
            if (is_congruence(l, c)) out.push_back(std::move(c));
            return;
        }
        for (int b = 0; b <= maxb; ++b) {
            assign[i] = b;
            self(self, i + 1, b == maxb ? maxb + 1 : maxb);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// The ordered set of join-irreducible congruences together with the
// edge-to-class assignment. Class ids are j00, j01, ... in order of first
// generating edge (edges scanned in sorted order).
struct JiCon {
    Poset poset;                       // one element per class, ids zero-padded
    std::vector<Congruence> classes;   // indexed like poset elements
    std::vector<Edge> rep_edge;        // least edge generating each class
    std::map<Edge, int> edge_class;    // every cover pair -> class index
};

inline JiCon ji_congruence_poset(const FiniteLattice& l) {
    if (l.size() < 2) throw error("trivial lattice has no prime intervals");
    std::vector<Congruence> classes;
    std::vector<Edge> reps;
    std::map<Edge, int> edge_class;
    for (const Edge& e : l.edges()) {
        Congruence c = principal_congruence(l, e.first, e.second);
        int k = -1;
        for (int i = 0; i < static_cast<int>(classes.size()); ++i)
            if (classes[i] == c) {
                k = i;
                break;
            }
        if (k < 0) {
            k = static_cast<int>(classes.size());
            classes.push_back(std::move(c));
            reps.push_back(e);
        }
        edge_class[e] = k;
    }
    const int m = static_cast<int>(classes.size());
    int width = 1;
    for (int t = m - 1; t >= 10; t /= 10) ++width;
    auto name = [&](int i) {
        std::string d = std::to_string(i);
        return "j" + std::string(width - d.size(), '0') + d;
    };
    std::vector<std::string> ids(m);
    for (int i = 0; i < m; ++i) ids[i] = name(i);
    std::vector<std::pair<std::string, std::string>> cov;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || !classes[i].refines(classes[j])) continue;
            bool between = false;
            for (int t = 0; t < m && !between; ++t)
                if (t != i && t != j && classes[i].refines(classes[t]) &&
                    classes[t].refines(classes[j]))
                    between = true;
            if (!between) cov.push_back({ids[i], ids[j]});
        }
    JiCon out;
    out.poset = Poset::make(ids, cov);
    out.classes = std::move(classes);
    out.rep_edge = std::move(reps);
    out.edge_class = std::move(edge_class);
    return out;
}

// Con L as Down(Ji Con L); element ids encode down-sets of ji congruences.
inline FiniteLattice congruence_lattice(const FiniteLattice& l) {
    if (l.size() < 2) {
        // trivial lattice: one congruence
        return FiniteLattice::from_poset(Poset::make({"{}"}, {}));
    }
    return down_set_lattice(ji_congruence_poset(l).poset);
}

// Lattice with a partial edge coloring; same color must mean same principal
// congruence (verified, not assumed).
struct ColoredLattice {
    FiniteLattice lattice;
    std::map<Edge, std::string> color;
};

struct ColorAudit {
    bool ok = true;
    // color -> congruence of its first edge
    std::map<std::string, Congruence> rep;
    // colors whose edges generate differing congruences, with an offending pair
    std::vector<std::tuple<std::string, Edge, Edge>> violations;
    // (c, d) -> true iff con(c) > con(d) strictly, on representatives
    std::map<std::pair<std::string, std::string>, bool> strictly_above;
};

inline ColorAudit verify_coloring(const ColoredLattice& cl) {
    ColorAudit audit;
    std::map<std::string, std::pair<Edge, Congruence>> first;
    for (const auto& [e, col] : cl.color) {
        if (!cl.lattice.is_cover(e.first, e.second))
            throw error("colored pair is not a cover: " + cl.lattice.id(e.first) + " < " +
                        cl.lattice.id(e.second));
        Congruence c = principal_congruence(cl.lattice, e.first, e.second);
        auto it = first.find(col);
        if (it == first.end()) {
            first.emplace(col, std::pair(e, c));
        } else if (!(it->second.second == c)) {
            audit.ok = false;
            audit.violations.emplace_back(col, it->second.first, e);
        }
    }
    for (auto& [col, ec] : first) audit.rep.emplace(col, ec.second);
    for (auto& [c1, r1] : audit.rep)
        for (auto& [c2, r2] : audit.rep) {
            if (c1 == c2) continue;
            audit.strictly_above[{c1, c2}] = r2.refines(r1) && !(r1 == r2);
        }
    return audit;
}

}  // namespace latcon
