#pragma once

#include <string>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/poset.hpp"

namespace latcon {

namespace detail {

inline std::string subset_id(const Poset& p, uint64_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < p.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) s += ",";
        s += p.id(i);
        first = false;
    }
    return s + "}";
}

inline std::vector<uint64_t> all_down_sets(const Poset& p) {
    const int n = p.size();
    if (n > 24) throw size_guard_exceeded("too many elements for down-set enumeration");
    // up[i] = mask of elements >= i
    std::vector<uint64_t> up(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) up[i] |= 1ull << j;
    std::vector<uint64_t> out;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool down = true;
        for (int i = 0; i < n && down; ++i)
            if (mask >> i & 1) {
                // all elements below i must be present: complement check
                for (int j = 0; j < n; ++j)
                    if (p.leq(j, i) && !(mask >> j & 1)) {
                        down = false;
                        break;
                    }
            }
        if (down) out.push_back(mask);
    }
    return out;
}

}  // namespace detail

// Lattice of all down sets of p under inclusion; element ids are canonical
// sorted-subset encodings such as "{a,b}". The result is distributive.
inline FiniteLattice down_set_lattice(const Poset& p) {
    auto masks = detail::all_down_sets(p);
    const int m = static_cast<int>(masks.size());
    std::vector<std::string> ids(m);
    for (int i = 0; i < m; ++i) ids[i] = detail::subset_id(p, masks[i]);
    // the poset constructor sorts ids; build the index map it will use
    std::vector<std::string> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    std::vector<int> pos(m);
    std::vector<uint64_t> mask_at(m);
    for (int i = 0; i < m; ++i) {
        int k = static_cast<int>(std::lower_bound(sorted_ids.begin(), sorted_ids.end(), ids[i]) -
                                 sorted_ids.begin());
        pos[i] = k;
        mask_at[k] = masks[i];
    }
    std::vector<Edge> covers;
    std::map<uint64_t, int> lookup;
    for (int k = 0; k < m; ++k) lookup[mask_at[k]] = k;
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j) {
            uint64_t a = mask_at[k], b = mask_at[j];
            if ((a & b) == a && __builtin_popcountll(b ^ a) == 1) covers.push_back({k, j});
        }
    Poset base = Poset::from_indexed(sorted_ids, covers);
    std::vector<int> meet(static_cast<size_t>(m) * m), join(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            meet[i * m + j] = lookup.at(mask_at[i] & mask_at[j]);
            join[i * m + j] = lookup.at(mask_at[i] | mask_at[j]);
        }
    return FiniteLattice::from_tables(base, std::move(meet), std::move(join));
}

// Subposet of join-irreducible elements (exactly one lower cover), ordered by
// the restriction of the lattice order.
inline Poset join_irreducibles(const FiniteLattice& d) {
    std::vector<int> keep;
    for (int i = 0; i < d.size(); ++i)
        if (d.base().lower_covers(i).size() == 1) keep.push_back(i);
    return d.base().restrict(keep);
}

}  // namespace latcon
