#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/io.hpp"
#include "latcon/iso.hpp"
#include "latcon/lattice.hpp"
#include "latcon/poset.hpp"

// Shared fixtures and independent oracles for the test suite. Everything in
// here is deliberately naive: these are the reference implementations the
// library is checked against.
namespace fixtures {

using namespace latcon;

inline std::string data_path(const std::string& name) {
    return std::string(LATCON_DATA_DIR) + "/" + name;
}
inline std::string patterns_path(const std::string& name) {
    return std::string(LATCON_PATTERNS_DIR) + "/" + name;
}
inline std::string golden_path(const std::string& name) {
    return std::string(LATCON_GOLDEN_DIR) + "/" + name;
}

inline Poset three_fork() { return load_poset(patterns_path("three_fork.poset")); }

inline Poset duality_sample_poset() { return load_poset(data_path("duality_sample.poset")); }

inline LatticeFile s7() { return load_lattice(data_path("s7.lattice")); }
inline LatticeFile s8() { return load_lattice(data_path("s8.lattice")); }

inline FiniteLattice lattice_of(const std::string& text) {
    return FiniteLattice::from_poset(parse_poset_text(text));
}

inline FiniteLattice chain(int n) {
    std::vector<std::pair<std::string, std::string>> cov;
    auto name = [](int i) { return "c" + std::to_string(i); };
    for (int i = 0; i + 1 < n; ++i) cov.push_back({name(i), name(i + 1)});
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(name(i));
    return FiniteLattice::from_poset(Poset::make(ids, cov));
}

inline FiniteLattice b2() {
    return lattice_of("0 < a\n0 < b\na < 1\nb < 1\n");
}

inline FiniteLattice m3() {
    return lattice_of("0 < x\n0 < y\n0 < z\nx < 1\ny < 1\nz < 1\n");
}

inline FiniteLattice n5() {
    return lattice_of("0 < a\n0 < b\na < c\nc < 1\nb < 1\n");
}

// grid Cm x Cn as a lattice (m, n = number of elements per chain)
inline FiniteLattice grid(int m, int n) {
    auto name = [](int i, int j) {
        return "g" + std::to_string(i) + "_" + std::to_string(j);
    };
    std::vector<std::pair<std::string, std::string>> cov;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (i + 1 < m) cov.push_back({name(i, j), name(i + 1, j)});
            if (j + 1 < n) cov.push_back({name(i, j), name(i, j + 1)});
        }
    return FiniteLattice::from_poset(Poset::make({}, cov));
}

// boolean lattice with k atoms
inline FiniteLattice boolean(int k) {
    std::vector<std::pair<std::string, std::string>> cov;
    auto name = [&](unsigned mask) {
        std::string s = "s";
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) s += static_cast<char>('a' + i);
        return s;
    };
    for (unsigned mask = 0; mask < (1u << k); ++mask)
        for (int i = 0; i < k; ++i)
            if (!(mask >> i & 1)) cov.push_back({name(mask), name(mask | (1u << i))});
    return FiniteLattice::from_poset(Poset::make({}, cov));
}

// ------------------------------------------------------------------ oracles

// all unlabeled posets with up to max_n elements, by maximal-element
// extension with brute-force isomorph rejection
inline std::vector<Poset> all_posets_upto(int max_n) {
    std::vector<Poset> out;
    std::vector<Poset> current{Poset::make({"e0"}, {})};
    out.push_back(current[0]);
    auto id_of = [](int i) { return "e" + std::to_string(i); };
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Poset> next;
        for (const auto& p : current) {
            // all down sets of p as lower sets for the new maximal element
            const int k = p.size();
            for (uint32_t mask = 0; mask < (1u << k); ++mask) {
                bool down = true;
                for (int i = 0; i < k && down; ++i)
                    if (mask >> i & 1)
                        for (int j = 0; j < k; ++j)
                            if (p.leq(j, i) && !(mask >> j & 1)) {
                                down = false;
                                break;
                            }
                if (!down) continue;
                std::vector<std::string> ids;
                for (int i = 0; i < k; ++i) ids.push_back(id_of(i));
                ids.push_back(id_of(k));
                std::vector<std::pair<std::string, std::string>> cov;
                for (auto [a, b] : p.covers()) cov.push_back({id_of(a), id_of(b)});
                // covers of the new element: maximal elements of the down set
                for (int i = 0; i < k; ++i) {
                    if (!(mask >> i & 1)) continue;
                    bool maximal_in_mask = true;
                    for (int j = 0; j < k; ++j)
                        if (j != i && (mask >> j & 1) && p.leq(i, j)) {
                            maximal_in_mask = false;
                            break;
                        }
                    if (maximal_in_mask) cov.push_back({id_of(i), id_of(k)});
                }
                Poset q = Poset::make(ids, cov);
                bool fresh = true;
                for (const auto& r : next)
                    if (are_isomorphic(q, r)) {
                        fresh = false;
                        break;
                    }
                if (fresh) next.push_back(std::move(q));
            }
        }
        for (const auto& q : next) out.push_back(q);
        current = std::move(next);
    }
    return out;
}

inline std::vector<Poset> all_posets_exactly(int n) {
    std::vector<Poset> out;
    for (auto& p : all_posets_upto(n))
        if (p.size() == n) out.push_back(std::move(p));
    return out;
}

// brute force over all injections: does pattern embed cover-preservingly?
inline bool brute_force_embedding_exists(const Poset& pat, const Poset& host, bool max_to_max) {
    const int np = pat.size(), nh = host.size();
    if (np > nh) return false;
    std::vector<int> sel(nh);
    std::iota(sel.begin(), sel.end(), 0);
    std::vector<int> idx(np);
    std::iota(idx.begin(), idx.end(), 0);
    // iterate all np-permutations of host elements
    std::vector<int> f(np, -1);
    std::vector<bool> used(nh, false);
    auto ok = [&]() {
        for (int a = 0; a < np; ++a)
            for (int b = 0; b < np; ++b)
                if (pat.leq(a, b) != host.leq(f[a], f[b])) return false;
        for (auto [a, b] : pat.covers()) {
            const auto& up = host.upper_covers(f[a]);
            if (!std::count(up.begin(), up.end(), f[b])) return false;
        }
        if (max_to_max)
            for (int m : pat.maximal_elements())
                if (!host.upper_covers(f[m]).empty()) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == np) return ok();
        for (int h = 0; h < nh; ++h) {
            if (used[h]) continue;
            used[h] = true;
            f[i] = h;
            if (self(self, i + 1)) return true;
            used[h] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace fixtures
