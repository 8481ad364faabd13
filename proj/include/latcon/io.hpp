#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latcon/congruence.hpp"
#include "latcon/embedding.hpp"
#include "latcon/poset.hpp"

namespace latcon {

// ---------------------------------------------------------------- poset text
//
//   # comment
//   elem x        isolated element
//   a < b         cover pair
//
// The serializer emits `elem` lines for isolated elements and cover lines in
// sorted order, so parse/serialize round-trips are byte-stable.

inline Poset parse_poset_text(const std::string& text, bool strict = false) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string t = line.substr(first, last - first + 1);
        if (t[0] == '#') continue;
        std::istringstream ls(t);
        std::string tok1, tok2, tok3;
        ls >> tok1 >> tok2 >> tok3;
        if (tok1 == "elem" && !tok2.empty() && tok3.empty()) {
            ids.push_back(tok2);
        } else if (tok2 == "<" && !tok1.empty() && !tok3.empty()) {
            std::string extra;
            if (ls >> extra) throw parse_error("line " + std::to_string(lineno) + ": trailing text");
            covers.push_back({tok1, tok3});
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": expected `a < b` or `elem a`");
        }
    }
    return Poset::make(ids, covers, strict);
}

inline std::string serialize_poset_text(const Poset& p) {
    std::string out;
    for (int i = 0; i < p.size(); ++i)
        if (p.upper_covers(i).empty() && p.lower_covers(i).empty())
            out += "elem " + p.id(i) + "\n";
    for (auto [a, b] : p.covers()) out += p.id(a) + " < " + p.id(b) + "\n";
    return out;
}

// ---------------------------------------------------------------- poset json

inline nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json j;
    j["elements"] = p.ids();
    auto& cov = j["covers"] = nlohmann::json::array();
    for (auto [a, b] : p.covers()) cov.push_back({p.id(a), p.id(b)});
    return j;
}

inline Poset poset_from_json(const nlohmann::json& j, bool strict = false) {
    std::vector<std::string> ids;
    if (j.contains("elements"))
        for (const auto& e : j.at("elements")) ids.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers"))
        for (const auto& c : j.at("covers"))
            covers.push_back({c.at(0).get<std::string>(), c.at(1).get<std::string>()});
    return Poset::make(ids, covers, strict);
}

// -------------------------------------------------------------- lattice json
//
// Lattice files are poset json plus optional "embedding" and "colors" blocks.
// Meet/join tables are always recomputed, never serialized.

struct LatticeFile {
    FiniteLattice lattice;
    std::optional<PlanarEmbedding> embedding;
    std::map<Edge, std::string> colors;

    ColoredLattice colored() const { return ColoredLattice{lattice, colors}; }
};

inline nlohmann::json lattice_to_json(const FiniteLattice& l,
                                      const PlanarEmbedding* emb = nullptr,
                                      const std::map<Edge, std::string>* colors = nullptr) {
    nlohmann::json j = poset_to_json(l.base());
    if (emb) {
        nlohmann::json up, lo;
        for (int v = 0; v < l.size(); ++v) {
            auto names = [&](const std::vector<int>& xs) {
                std::vector<std::string> out;
                for (int x : xs) out.push_back(l.id(x));
                return out;
            };
            up[l.id(v)] = names(emb->upper_order[v]);
            lo[l.id(v)] = names(emb->lower_order[v]);
        }
        j["embedding"] = {{"upper_order", up}, {"lower_order", lo}};
    }
    if (colors && !colors->empty()) {
        auto& cj = j["colors"] = nlohmann::json::array();
        for (const auto& [e, col] : *colors) cj.push_back({l.id(e.first), l.id(e.second), col});
    }
    return j;
}

inline LatticeFile lattice_from_json(const nlohmann::json& j) {
    LatticeFile f;
    f.lattice = FiniteLattice::from_poset(poset_from_json(j));
    const auto& l = f.lattice;
    if (j.contains("embedding")) {
        PlanarEmbedding e;
        e.lattice = l;
        e.upper_order.resize(l.size());
        e.lower_order.resize(l.size());
        const auto& emb = j.at("embedding");
        for (const auto& [key, block] : std::map<std::string, std::string>{
                 {"upper_order", "upper"}, {"lower_order", "lower"}}) {
            for (auto it = emb.at(key).begin(); it != emb.at(key).end(); ++it) {
                int v = l.index_of(it.key());
                std::vector<int> order;
                for (const auto& s : it.value()) order.push_back(l.index_of(s.get<std::string>()));
                (key == "upper_order" ? e.upper_order[v] : e.lower_order[v]) = order;
            }
        }
        f.embedding = std::move(e);
    }
    if (j.contains("colors"))
        for (const auto& c : j.at("colors")) {
            Edge e{l.index_of(c.at(0).get<std::string>()), l.index_of(c.at(1).get<std::string>())};
            f.colors[e] = c.at(2).get<std::string>();
        }
    return f;
}

// ------------------------------------------------------------------ file io

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path);
    out << content;
}

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Loads either a poset text file or a poset/lattice json file by extension.
inline Poset load_poset(const std::string& path, bool strict = false) {
    std::string text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return poset_from_json(nlohmann::json::parse(text), strict);
    auto t = text.find_first_not_of(" \t\r\n");
    if (t != std::string::npos && text[t] == '{')
        return poset_from_json(nlohmann::json::parse(text), strict);
    return parse_poset_text(text, strict);
}

inline LatticeFile load_lattice(const std::string& path) {
    std::string text = read_file(path);
    auto t = text.find_first_not_of(" \t\r\n");
    if (t != std::string::npos && text[t] == '{')
        return lattice_from_json(nlohmann::json::parse(text));
    LatticeFile f;
    f.lattice = FiniteLattice::from_poset(parse_poset_text(text));
    return f;
}

}  // namespace latcon
