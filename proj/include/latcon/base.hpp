#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace latcon {

// A cover pair (bottom, top) of element indices; the prime intervals of a
// lattice and the Hasse edges of a poset are both pairs of this kind.
using Edge = std::pair<int, int>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

struct empty_poset : error {
    empty_poset() : error("empty poset") {}
};

struct unknown_element : error {
    explicit unknown_element(const std::string& id)
        : error("unknown element id: " + id) {}
};

enum class lattice_defect { no_lub, no_glb, not_unique };

struct not_a_lattice : error {
    std::string a, b;
    lattice_defect reason;
    not_a_lattice(std::string a_, std::string b_, lattice_defect r)
        : error("not a lattice: {" + a_ + ", " + b_ + "} " +
                (r == lattice_defect::no_lub    ? "has no upper bound"
                 : r == lattice_defect::no_glb  ? "has no lower bound"
                                                : "has no unique bound")),
          a(std::move(a_)), b(std::move(b_)), reason(r) {}
};

struct size_guard_exceeded : error {
    using error::error;
};

struct cap_exceeded : error {
    using error::error;
};

struct not_graded : error {
    not_graded() : error("lattice is not graded") {}
};

struct not_rectangular : error {
    not_rectangular() : error("embedding is not rectangular") {}
};

struct not_sr : error {
    not_sr() : error("lattice is not slim rectangular") {}
};

struct not_sps : error {
    explicit not_sps(const std::string& why)
        : error("lattice is not slim planar semimodular: " + why) {}
};

struct not_a_covering_square : error {
    not_a_covering_square() : error("not a covering square") {}
};

struct not_distributive : error {
    not_distributive() : error("lattice is not distributive") {}
};

struct embedding_not_found : error {
    embedding_not_found() : error("no planar embedding found") {}
};

struct verification_failed : error {
    using error::error;
};

struct invalid_delta : error {
    using error::error;
};

}  // namespace latcon
