#include <catch2/catch_amalgamated.hpp>

#include "latcon/birkhoff.hpp"
#include "latcon/io.hpp"
#include "latcon/iso.hpp"

#include "support/fixtures.hpp"

using namespace latcon;

TEST_CASE("down set lattice basics") {
    SECTION("empty poset") {
        auto d = down_set_lattice(Poset::make({}, {}));
        REQUIRE(d.size() == 1);
        REQUIRE(d.id(0) == "{}");
    }
    SECTION("2-antichain gives the boolean square") {
        auto d = down_set_lattice(Poset::make({"x", "y"}, {}));
        REQUIRE(d.size() == 4);
        REQUIRE(is_distributive(d));
        REQUIRE(d.id(d.top()) == "{x,y}");
    }
    SECTION("duality sample has 20 elements isomorphic to the transcription") {
        auto p = fixtures::duality_sample_poset();
        auto d = down_set_lattice(p);
        REQUIRE(d.size() == 20);
        auto fixture = load_lattice(fixtures::data_path("duality_sample.lattice"));
        REQUIRE(fixture.lattice.size() == 20);
        REQUIRE(are_isomorphic(d.base(), fixture.lattice.base()).has_value());
        REQUIRE(is_distributive(d));
    }
}

TEST_CASE("join irreducibles") {
    SECTION("2-chain") {
        auto ji = join_irreducibles(fixtures::chain(2));
        REQUIRE(ji.size() == 1);
    }
    SECTION("boolean square gives the 2-antichain") {
        auto ji = join_irreducibles(fixtures::b2());
        REQUIRE(ji.size() == 2);
        REQUIRE(ji.covers().empty());
    }
    SECTION("transcription recovers the sample poset") {
        auto fixture = load_lattice(fixtures::data_path("duality_sample.lattice"));
        auto ji = join_irreducibles(fixture.lattice);
        REQUIRE(ji.size() == 6);
        REQUIRE(are_isomorphic(ji, fixtures::duality_sample_poset()).has_value());
    }
}

TEST_CASE("birkhoff round trips on all small posets") {
    auto posets = fixtures::all_posets_upto(6);
    for (const auto& p : posets) {
        auto d = down_set_lattice(p);
        REQUIRE(is_distributive(d));
        auto ji = join_irreducibles(d);
        REQUIRE(are_isomorphic(ji, p).has_value());
        // second round trip
        auto d2 = down_set_lattice(ji);
        REQUIRE(are_isomorphic(d2.base(), d.base()).has_value());
    }
}
