#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "latcon/iso.hpp"
#include "latcon/poset.hpp"

namespace latcon {

// Finite lattice: a poset validated to have all binary meets and joins, with
// materialized meet/join tables and rank data when the lattice is graded.
class FiniteLattice {
public:
    FiniteLattice() = default;

    // Validates that every pair has a unique lub and glb and builds tables.
    static FiniteLattice from_poset(const Poset& p) {
        const int n = p.size();
        if (n == 0) throw empty_poset();
        FiniteLattice l;
        l.base_ = p;
        l.meet_.assign(static_cast<size_t>(n) * n, -1);
        l.join_.assign(static_cast<size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                int lub = bound_of(p, a, b, /*upper=*/true);
                int glb = bound_of(p, a, b, /*upper=*/false);
                l.join_[a * n + b] = l.join_[b * n + a] = lub;
                l.meet_[a * n + b] = l.meet_[b * n + a] = glb;
            }
        }
        l.finish();
        return l;
    }

    // Trusted factory for constructions that produce tables directly
    // (down-set lattices); tables are spot-checked for bounds only.
    static FiniteLattice from_tables(const Poset& p, std::vector<int> meet,
                                     std::vector<int> join) {
        const int n = p.size();
        if (n == 0) throw empty_poset();
        FiniteLattice l;
        l.base_ = p;
        l.meet_ = std::move(meet);
        l.join_ = std::move(join);
        l.finish();
        return l;
    }

    const Poset& base() const { return base_; }
    int size() const { return base_.size(); }
    const std::string& id(int i) const { return base_.id(i); }
    int index_of(const std::string& s) const { return base_.index_of(s); }

    int meet(int a, int b) const { return meet_[a * size() + b]; }
    int join(int a, int b) const { return join_[a * size() + b]; }
    bool leq(int a, int b) const { return base_.leq(a, b); }
    bool is_cover(int a, int b) const {
        const auto& up = base_.upper_covers(a);
        return std::count(up.begin(), up.end(), b) > 0;
    }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::vector<Edge>& edges() const { return base_.covers(); }

    bool graded() const { return !rank_.empty(); }
    int rank(int x) const {
        if (!graded()) throw not_graded();
        return rank_[x];
    }
    int height() const {
        if (!graded()) throw not_graded();
        return rank_[top_];
    }

private:
    static int bound_of(const Poset& p, int a, int b, bool upper) {
        const int n = p.size();
        std::vector<int> cands;
        for (int c = 0; c < n; ++c) {
            bool in = upper ? (p.leq(a, c) && p.leq(b, c)) : (p.leq(c, a) && p.leq(c, b));
            if (in) cands.push_back(c);
        }
        if (cands.empty())
            throw not_a_lattice(p.id(a), p.id(b),
                                upper ? lattice_defect::no_lub : lattice_defect::no_glb);
        int best = -1;
        for (int c : cands) {
            bool extreme = true;
            for (int d : cands) {
                if (upper ? !p.leq(c, d) : !p.leq(d, c)) {
                    extreme = false;
                    break;
                }
            }
            if (extreme) {
                best = c;
                break;
            }
        }
        if (best < 0)
            throw not_a_lattice(p.id(a), p.id(b), lattice_defect::not_unique);
        return best;
    }

    void finish() {
        const int n = base_.size();
        auto mins = base_.minimal_elements();
        auto maxs = base_.maximal_elements();
        if (mins.size() != 1 || maxs.size() != 1)
            throw not_a_lattice(base_.id(mins.size() > 1 ? mins[1] : 0),
                                base_.id(maxs.size() > 1 ? maxs[1] : 0),
                                mins.size() != 1 ? lattice_defect::no_glb
                                                 : lattice_defect::no_lub);
        bottom_ = mins[0];
        top_ = maxs[0];
        // longest-path rank from the bottom; graded iff covers raise it by one
        std::vector<int> r(n, 0);
        std::vector<int> indeg(n, 0);
        for (auto [a, b] : base_.covers()) indeg[b]++;
        std::vector<int> queue{bottom_};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : base_.upper_covers(u)) {
                r[v] = std::max(r[v], r[u] + 1);
                if (--indeg[v] == 0) queue.push_back(v);
            }
        }
        bool graded = true;
        for (auto [a, b] : base_.covers())
            if (r[b] != r[a] + 1) graded = false;
        if (graded) rank_ = std::move(r);
    }

    Poset base_;
    std::vector<int> meet_, join_;
    std::vector<int> rank_;  // empty when not graded
    int bottom_ = -1, top_ = -1;
};

// a ∧ b ≺ a implies b ≺ a ∨ b
inline bool is_semimodular(const FiniteLattice& l) {
    const int n = l.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (l.is_cover(l.meet(a, b), a) && !l.is_cover(b, l.join(a, b))) return false;
        }
    return true;
}

inline bool is_distributive(const FiniteLattice& l) {
    const int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    return false;
    return true;
}

inline bool is_modular(const FiniteLattice& l) {
    const int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
                    return false;
    return true;
}

// no M3 sublattice: no triple of pairwise-incomparable elements with all
// pairwise meets equal and all pairwise joins equal
inline bool is_slim(const FiniteLattice& l) {
    const int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (l.leq(x, y) || l.leq(y, x)) continue;
            int m = l.meet(x, y), j = l.join(x, y);
            for (int z = y + 1; z < n; ++z) {
                if (l.leq(x, z) || l.leq(z, x) || l.leq(y, z) || l.leq(z, y)) continue;
                if (l.meet(x, z) == m && l.meet(y, z) == m && l.join(x, z) == j &&
                    l.join(y, z) == j)
                    return false;
            }
        }
    return true;
}

// Stacks b atop a, identifying top of a with bottom of b. Ids of a survive;
// ids of b are kept when fresh, otherwise primed until fresh.
inline FiniteLattice glued_sum(const FiniteLattice& a, const FiniteLattice& b) {
    if (b.size() == 1) return a;
    if (a.size() == 1) return b;
    std::vector<std::string> ids = a.base().ids();
    std::set<std::string> taken(ids.begin(), ids.end());
    std::vector<std::string> bmap(b.size());
    for (int i = 0; i < b.size(); ++i) {
        if (i == b.bottom()) {
            bmap[i] = a.id(a.top());
            continue;
        }
        std::string cand = b.id(i);
        while (taken.count(cand)) cand += "'";
        taken.insert(cand);
        bmap[i] = cand;
        ids.push_back(cand);
    }
    std::vector<std::pair<std::string, std::string>> cov;
    for (auto [x, y] : a.base().covers()) cov.push_back({a.id(x), a.id(y)});
    for (auto [x, y] : b.base().covers()) cov.push_back({bmap[x], bmap[y]});
    return FiniteLattice::from_poset(Poset::make(ids, cov));
}

// Injective map preserving meets, joins and covers (image covers are covers
// of the host). Pattern is expected to be small.
inline std::optional<EmbeddingWitness> find_cover_preserving_sublattice(
    const FiniteLattice& host, const FiniteLattice& pattern) {
    const int np = pattern.size(), nh = host.size();
    if (np > nh) return std::nullopt;
    std::vector<int> order = detail::search_order(pattern.base());
    std::vector<int> assign(np, -1);
    std::vector<bool> used(nh, false);

    auto consistent = [&](int pe, int he) {
        if (used[he]) return false;
        for (int qe = 0; qe < np; ++qe) {
            int qh = assign[qe];
            if (qh < 0) continue;
            if (pattern.is_cover(qe, pe) && !host.is_cover(qh, he)) return false;
            if (pattern.is_cover(pe, qe) && !host.is_cover(he, qh)) return false;
            // meet/join closure checks against already-assigned pairs
            int pm = pattern.meet(pe, qe), pj = pattern.join(pe, qe);
            if (assign[pm] >= 0 && host.meet(he, qh) != assign[pm]) return false;
            if (assign[pj] >= 0 && host.join(he, qh) != assign[pj]) return false;
            if (pattern.leq(pe, qe) != host.leq(he, qh)) return false;
            if (pattern.leq(qe, pe) != host.leq(qh, he)) return false;
        }
        return true;
    };
    std::vector<int> out;
    auto rec = [&](auto&& self, size_t k) -> bool {
        if (k == order.size()) {
            // full meet/join preservation
            for (int x = 0; x < np; ++x)
                for (int y = 0; y < np; ++y) {
                    if (host.meet(assign[x], assign[y]) != assign[pattern.meet(x, y)])
                        return false;
                    if (host.join(assign[x], assign[y]) != assign[pattern.join(x, y)])
                        return false;
                }
            out = assign;
            return true;
        }
        int pe = order[k];
        for (int he = 0; he < nh; ++he) {
            if (!consistent(pe, he)) continue;
            assign[pe] = he;
            used[he] = true;
            if (self(self, k + 1)) return true;
            assign[pe] = -1;
            used[he] = false;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return EmbeddingWitness{std::move(out)};
}

}  // namespace latcon
