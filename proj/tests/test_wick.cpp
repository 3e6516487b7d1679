#include "doctest.h"
#include "planarlim/planar.hpp"
#include "planarlim/wick_oracle.hpp"

using namespace planarlim;

namespace {

LaurentN all_genera(const MapCounts& counts, const Partition& p) {
    LaurentN out;
    for (auto& [g, c] : counts.at(p)) out[2 - 2 * g] = c;
    return out;
}

}  // namespace

TEST_CASE("face counts of small one-vertex maps") {
    CHECK(faces_of_matching(rotation_for({2}), {1, 0}) == 2);
    std::vector<int> rot4 = rotation_for({4});
    CHECK(faces_of_matching(rot4, {2, 3, 0, 1}) == 1);  // opposite half-edges: torus
    CHECK(faces_of_matching(rot4, {1, 0, 3, 2}) == 3);  // adjacent half-edges: sphere
    CHECK_THROWS(faces_of_matching(rot4, {0, 2, 1, 3}));
    CHECK_THROWS(faces_of_matching(rot4, {1, 0, 3}));
}

TEST_CASE("partition function coefficients") {
    CHECK(z_coefficient(Partition()) == LaurentN{{0, Rat(1)}});
    CHECK(z_coefficient(Partition::from_parts({2})) == LaurentN{{2, Rat(1, 2)}});
    CHECK(z_coefficient(Partition::from_parts({1, 1})) == LaurentN{{2, Rat(1, 2)}});
    CHECK(z_coefficient(Partition::from_parts({3})).empty());
    // a_4: two planar matchings, one toroidal, over 4.
    CHECK(z_coefficient(Partition::from_parts({4})) == LaurentN{{2, Rat(1, 2)}, {0, Rat(1, 4)}});
}

TEST_CASE("connected counts give the planar coefficients") {
    MapCounts c = connected_coefficients(8);
    CHECK(c.at(Partition::from_parts({4})).at(0) == Rat(1, 2));
    CHECK(c.at(Partition::from_parts({3, 3})).at(0) == Rat(2, 3));
    CHECK(c.at(Partition::from_parts({2, 2})).at(0) == Rat(1, 4));
    for (auto& [p, genera] : c)
        for (auto& [g, v] : genera) {
            CHECK(g >= 0);
            CHECK(v.sign() > 0);
            CHECK(4 * g <= p.weight());
        }
}

TEST_CASE("oracle and fixed-point pipeline agree through weight 8") {
    MapCounts c = connected_coefficients(8);
    MultiSeries F0 = f0_multivariate(8).F0;
    for (auto& [p, v] : F0.terms()) {
        INFO(p.str());
        REQUIRE(c.count(p));
        CHECK(c.at(p).count(0));
        CHECK(c.at(p).at(0) == v);
    }
    for (auto& [p, genera] : c) {
        INFO(p.str());
        if (genera.count(0)) CHECK(F0.coefficient(p) == genera.at(0));
    }
}

TEST_CASE("disconnected products follow the exponential formula") {
    MapCounts c = connected_coefficients(8);
    Partition a2 = Partition::from_parts({2}), a4 = Partition::from_parts({4}), both = Partition::from_parts({2, 4});
    LaurentN expected = laurent_mul(z_coefficient(a2), z_coefficient(a4));
    laurent_add_to(expected, all_genera(c, both));
    CHECK(z_coefficient(both) == expected);
    // The other splittings of a_1 a_3 a_4 have a block of odd weight, which contributes nothing.
    Partition a13 = Partition::from_parts({1, 3});
    Partition mixed = Partition::from_parts({1, 3, 4});
    LaurentN e2 = laurent_mul(all_genera(c, a13), z_coefficient(a4));
    laurent_add_to(e2, all_genera(c, mixed));
    CHECK(z_coefficient(mixed) == e2);
}

TEST_CASE("oracle caps") {
    CHECK_THROWS_WITH(connected_coefficients(10), "oracle cap exceeded");
    CHECK_THROWS_WITH(connected_coefficients(12, true), "oracle cap exceeded");
    MapCounts c = connected_coefficients(10, true);
    MultiSeries F0 = f0_multivariate(10).F0;
    CHECK(c.at(Partition::from_parts({10})).at(0) == F0.coefficient(Partition::from_parts({10})));
}
