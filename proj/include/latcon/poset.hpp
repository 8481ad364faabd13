#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "latcon/base.hpp"

namespace latcon {

// Finite poset given by its cover relation. Immutable after construction;
// element ids are strings, internally indexed 0..n-1 in sorted id order.
class Poset {
public:
    Poset() = default;

    // Builds a poset from element ids and cover pairs (by id). Ids appearing
    // only in covers are added implicitly. Redundant covers (those implied by
    // transitivity) are dropped unless strict is set, in which case they are
    // rejected. Cycles and self-covers are always rejected.
    static Poset make(const std::vector<std::string>& ids,
                      const std::vector<std::pair<std::string, std::string>>& covers,
                      bool strict = false) {
        std::set<std::string> idset(ids.begin(), ids.end());
        for (const auto& [a, b] : covers) {
            idset.insert(a);
            idset.insert(b);
        }
        std::vector<std::string> sorted_ids(idset.begin(), idset.end());
        std::map<std::string, int> index;
        for (int i = 0; i < static_cast<int>(sorted_ids.size()); ++i)
            index[sorted_ids[i]] = i;
        std::vector<Edge> e;
        e.reserve(covers.size());
        for (const auto& [a, b] : covers) e.emplace_back(index.at(a), index.at(b));
        return from_indexed(std::move(sorted_ids), std::move(e), strict);
    }

    // Same, with pre-indexed covers relative to the given (sorted) id list.
    static Poset from_indexed(std::vector<std::string> ids, std::vector<Edge> covers,
                              bool strict = false) {
        Poset p;
        p.ids_ = std::move(ids);
        const int n = static_cast<int>(p.ids_.size());
        for (int i = 0; i + 1 < n; ++i)
            if (p.ids_[i] >= p.ids_[i + 1]) throw parse_error("element ids not sorted/unique");
        std::sort(covers.begin(), covers.end());
        covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
        for (auto [a, b] : covers) {
            if (a < 0 || b < 0 || a >= n || b >= n) throw parse_error("cover index out of range");
            if (a == b) throw parse_error("self-cover on " + p.ids_[a]);
        }
        // transitive closure by DFS over the raw relation; cycle check via DFS colors
        std::vector<std::vector<int>> adj(n);
        for (auto [a, b] : covers) adj[a].push_back(b);
        std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
        std::vector<int> order;
        {
            std::vector<std::pair<int, size_t>> stack;
            for (int s = 0; s < n; ++s) {
                if (state[s]) continue;
                stack.emplace_back(s, 0);
                state[s] = 1;
                while (!stack.empty()) {
                    auto& [u, k] = stack.back();
                    if (k < adj[u].size()) {
                        int v = adj[u][k++];
                        if (state[v] == 1) throw parse_error("cover relation has a cycle");
                        if (state[v] == 0) {
                            state[v] = 1;
                            stack.emplace_back(v, 0);
                        }
                    } else {
                        state[u] = 2;
                        order.push_back(u);
                        stack.pop_back();
                    }
                }
            }
        }
        p.words_ = (n + 63) / 64;
        p.leq_.assign(static_cast<size_t>(n) * p.words_, 0);
        for (int u : order) {  // reverse topological: successors already done
            p.set_leq(u, u);
            for (int v : adj[u])
                for (int w = 0; w < p.words_; ++w)
                    p.leq_[u * p.words_ + w] |= p.leq_[v * p.words_ + w];
        }
        // transitive reduction
        std::vector<Edge> reduced;
        for (auto [a, b] : covers) {
            bool redundant = false;
            for (int c : adj[a]) {
                if (c != b && p.leq(c, b)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) {
                if (strict)
                    throw parse_error("redundant cover " + p.ids_[a] + " < " + p.ids_[b]);
                continue;
            }
            reduced.push_back({a, b});
        }
        // a non-cover may still hide behind chains of length > 1; re-check properly
        std::vector<Edge> final_covers;
        for (auto [a, b] : reduced) {
            bool intermediate = false;
            for (int c = 0; c < n && !intermediate; ++c)
                if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) intermediate = true;
            if (intermediate) {
                if (strict)
                    throw parse_error("redundant cover " + p.ids_[a] + " < " + p.ids_[b]);
                continue;
            }
            final_covers.push_back({a, b});
        }
        p.covers_ = std::move(final_covers);
        std::sort(p.covers_.begin(), p.covers_.end());
        p.up_.assign(n, {});
        p.dn_.assign(n, {});
        for (auto [a, b] : p.covers_) {
            p.up_[a].push_back(b);
            p.dn_[b].push_back(a);
        }
        return p;
    }

    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(int i) const { return ids_[i]; }

    int index_of(const std::string& id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) throw unknown_element(id);
        return static_cast<int>(it - ids_.begin());
    }

    bool contains(const std::string& id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        return it != ids_.end() && *it == id;
    }

    const std::vector<Edge>& covers() const { return covers_; }

    bool leq(int a, int b) const {
        return (leq_[a * words_ + (b >> 6)] >> (b & 63)) & 1;
    }
    bool lt(int a, int b) const { return a != b && leq(a, b); }

    const std::vector<int>& upper_covers(int x) const { return up_[x]; }
    const std::vector<int>& lower_covers(int x) const { return dn_[x]; }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (up_[i].empty()) out.push_back(i);
        return out;
    }
    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (dn_[i].empty()) out.push_back(i);
        return out;
    }

    // smallest down set containing H
    std::vector<int> principal_down_set(const std::vector<int>& h) const {
        std::vector<bool> in(size(), false);
        for (int x : h) {
            if (x < 0 || x >= size()) throw unknown_element(std::to_string(x));
            for (int y = 0; y < size(); ++y)
                if (leq(y, x)) in[y] = true;
        }
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (in[i]) out.push_back(i);
        return out;
    }

    std::vector<std::string> principal_down_set_ids(const std::vector<std::string>& h) const {
        std::vector<int> hi;
        hi.reserve(h.size());
        for (const auto& s : h) hi.push_back(index_of(s));
        std::vector<std::string> out;
        for (int i : principal_down_set(hi)) out.push_back(ids_[i]);
        return out;
    }

    // subposet induced on the given (sorted or not) index set, keeping ids
    Poset restrict(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        std::vector<std::string> ids;
        ids.reserve(keep.size());
        for (int i : keep) ids.push_back(ids_[i]);
        std::vector<std::pair<std::string, std::string>> cov;
        for (size_t i = 0; i < keep.size(); ++i) {
            for (size_t j = 0; j < keep.size(); ++j) {
                int a = keep[i], b = keep[j];
                if (a == b || !leq(a, b)) continue;
                bool between = false;
                for (int c : keep)
                    if (c != a && c != b && leq(a, c) && leq(c, b)) {
                        between = true;
                        break;
                    }
                if (!between) cov.push_back({ids[i], ids[j]});
            }
        }
        return make(ids, cov);
    }

    bool operator==(const Poset& o) const {
        return ids_ == o.ids_ && covers_ == o.covers_;
    }

private:
    void set_leq(int a, int b) { leq_[a * words_ + (b >> 6)] |= 1ull << (b & 63); }

    std::vector<std::string> ids_;
    std::vector<Edge> covers_;
    std::vector<uint64_t> leq_;
    int words_ = 0;
    std::vector<std::vector<int>> up_, dn_;
};

}  // namespace latcon
