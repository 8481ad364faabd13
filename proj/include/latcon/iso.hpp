#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "latcon/poset.hpp"

namespace latcon {

// Witness for a cover-preserving embedding (or isomorphism) of a pattern
// poset into a host poset: map[i] = host index of pattern element i.
struct EmbeddingWitness {
    std::vector<int> map;

    std::map<std::string, std::string> by_id(const Poset& pattern, const Poset& host) const {
        std::map<std::string, std::string> out;
        for (int i = 0; i < static_cast<int>(map.size()); ++i)
            out[pattern.id(i)] = host.id(map[i]);
        return out;
    }
};

namespace detail {

// iterated degree refinement; returns stable color per element
inline std::vector<int> refine_colors(const Poset& p) {
    const int n = p.size();
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i)
        color[i] = static_cast<int>(p.lower_covers(i).size()) * 1000 +
                   static_cast<int>(p.upper_covers(i).size());
    for (int round = 0; round < n; ++round) {
        std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> lo, hi;
            for (int j : p.lower_covers(i)) lo.push_back(color[j]);
            for (int j : p.upper_covers(i)) hi.push_back(color[j]);
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            sig[i] = {color[i], std::move(lo), std::move(hi)};
        }
        std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

// deterministic element order: by (in-degree, out-degree, id)
inline std::vector<int> search_order(const Poset& p) {
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto ka = std::tuple(p.lower_covers(a).size(), p.upper_covers(a).size(), p.id(a));
        auto kb = std::tuple(p.lower_covers(b).size(), p.upper_covers(b).size(), p.id(b));
        return ka < kb;
    });
    return order;
}

struct EmbedSearch {
    const Poset& pat;
    const Poset& host;
    bool max_to_max;
    bool bijective;
    std::vector<int> order;        // pattern elements in assignment order
    std::vector<int> assign;       // pattern -> host or -1
    std::vector<bool> used;        // host side
    std::vector<bool> host_maximal;
    std::vector<int> pat_color, host_color;  // only for bijective mode

    EmbedSearch(const Poset& p, const Poset& h, bool m2m, bool bij)
        : pat(p), host(h), max_to_max(m2m), bijective(bij) {
        order = search_order(pat);
        assign.assign(pat.size(), -1);
        used.assign(host.size(), false);
        host_maximal.assign(host.size(), false);
        for (int m : host.maximal_elements()) host_maximal[m] = true;
        if (bijective) {
            pat_color = refine_colors(pat);
            host_color = refine_colors(host);
        }
    }

    bool consistent(int pe, int he) const {
        if (used[he]) return false;
        if (bijective && pat_color[pe] != host_color[he]) return false;
        if (max_to_max && pat.upper_covers(pe).empty() && !host_maximal[he]) return false;
        for (int qe = 0; qe < pat.size(); ++qe) {
            int qh = assign[qe];
            if (qh < 0) continue;
            // covers must map to covers
            bool cov_qp = std::count(pat.upper_covers(qe).begin(), pat.upper_covers(qe).end(), pe) > 0;
            bool cov_pq = std::count(pat.upper_covers(pe).begin(), pat.upper_covers(pe).end(), qe) > 0;
            if (cov_qp && !std::count(host.upper_covers(qh).begin(), host.upper_covers(qh).end(), he))
                return false;
            if (cov_pq && !std::count(host.upper_covers(he).begin(), host.upper_covers(he).end(), qh))
                return false;
            // order preserved and reflected
            if (pat.leq(qe, pe) != host.leq(qh, he)) return false;
            if (pat.leq(pe, qe) != host.leq(he, qh)) return false;
        }
        return true;
    }

    bool run(size_t k, std::vector<int>& out) {
        if (k == order.size()) {
            out = assign;
            return true;
        }
        int pe = order[k];
        for (int he = 0; he < host.size(); ++he) {
            if (!consistent(pe, he)) continue;
            assign[pe] = he;
            used[he] = true;
            if (run(k + 1, out)) return true;
            assign[pe] = -1;
            used[he] = false;
        }
        return false;
    }
};

}  // namespace detail

// Backtracking search for an injective map whose image is a cover-preserving
// subposet: pattern covers map onto host covers and comparability is both
// preserved and reflected. With max_to_max, maximal elements of the pattern
// must land on maximal elements of the host. Returns the first witness in
// deterministic order, if any.
inline std::optional<EmbeddingWitness> find_cover_preserving_embedding(
    const Poset& pattern, const Poset& host, bool max_to_max = false) {
    if (pattern.size() > host.size()) return std::nullopt;
    detail::EmbedSearch s(pattern, host, max_to_max, false);
    std::vector<int> out;
    if (!s.run(0, out)) return std::nullopt;
    return EmbeddingWitness{std::move(out)};
}

// Bijective cover-preserving witness, if the posets are isomorphic.
inline std::optional<EmbeddingWitness> are_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
    {
        auto cp = detail::refine_colors(p), cq = detail::refine_colors(q);
        auto sp = cp, sq = cq;
        std::sort(sp.begin(), sp.end());
        std::sort(sq.begin(), sq.end());
        if (sp != sq) return std::nullopt;
    }
    detail::EmbedSearch s(p, q, false, true);
    std::vector<int> out;
    if (!s.run(0, out)) return std::nullopt;
    return EmbeddingWitness{std::move(out)};
}

// replay helpers used by tests and property reports
inline bool witness_is_cover_preserving(const Poset& pattern, const Poset& host,
                                        const EmbeddingWitness& w, bool max_to_max = false) {
    if (static_cast<int>(w.map.size()) != pattern.size()) return false;
    std::vector<bool> used(host.size(), false);
    for (int h : w.map) {
        if (h < 0 || h >= host.size() || used[h]) return false;
        used[h] = true;
    }
    for (int a = 0; a < pattern.size(); ++a)
        for (int b = 0; b < pattern.size(); ++b) {
            if (pattern.leq(a, b) != host.leq(w.map[a], w.map[b])) return false;
        }
    for (auto [a, b] : pattern.covers()) {
        const auto& up = host.upper_covers(w.map[a]);
        if (!std::count(up.begin(), up.end(), w.map[b])) return false;
    }
    if (max_to_max) {
        for (int m : pattern.maximal_elements())
            if (!host.upper_covers(w.map[m]).empty()) return false;
    }
    return true;
}

}  // namespace latcon
