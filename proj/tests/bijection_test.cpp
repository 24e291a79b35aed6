#include <doctest.h>

#include <random>

#include "semifib/bijection.hpp"
#include "semifib/power_partitions.hpp"
#include "semifib/semifib.hpp"

using namespace semifib;

namespace {

Partition P(std::initializer_list<std::uint64_t> parts) {
    return Partition::normalize(std::vector<std::uint64_t>(parts));
}

const Budget budget;

} // namespace

TEST_CASE("published pairs, modulus 2, weight 9") {
    const std::pair<Partition, Partition> rows[] = {
        {P({8, 1}), P({8, 1})},
        {P({4, 3, 2}), P({4, 2, 1, 1, 1})},
        {P({6, 3}), P({2, 2, 2, 1, 1, 1})},
        {P({5, 4}), P({4, 1, 1, 1, 1, 1})},
        {P({7, 2}), P({2, 1, 1, 1, 1, 1, 1, 1})},
        {P({9}), P({1, 1, 1, 1, 1, 1, 1, 1, 1})},
    };
    for (const auto& [source, image] : rows) {
        CHECK(sf_to_nd(source, 2, budget) == image);
        CHECK(nd_to_sf(image, 2) == source);
    }
}

TEST_CASE("published pairs, modulus 3, weight 11") {
    const std::pair<Partition, Partition> rows[] = {
        {P({11}), P({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})},
        {P({8, 3}), P({3, 1, 1, 1, 1, 1, 1, 1, 1})},
        {P({6, 5}), P({3, 3, 1, 1, 1, 1, 1})},
        {P({9, 2}), P({9, 1, 1})},
    };
    for (const auto& [source, image] : rows) {
        CHECK(sf_to_nd(source, 3, budget) == image);
        CHECK(nd_to_sf(image, 3) == source);
    }
}

TEST_CASE("compact image form avoids expansion") {
    MultiplicityForm mf = sf_to_nd_form(P({9}), 2);
    REQUIRE(mf.entries().size() == 1);
    CHECK(mf.entries()[0].part == 1);
    CHECK(mf.entries()[0].multiplicity == 9);
    CHECK(mf.weight() == 9);

    // A huge image stays representable even when expansion would not be.
    Budget tight;
    tight.enumeration_elements = 4;
    MultiplicityForm big = sf_to_nd_form(P({25}), 2);
    CHECK(big.part_count() == 25);
    CHECK_THROWS_AS(big.expand(tight), BudgetError);
}

TEST_CASE("domain preconditions are enforced") {
    CHECK_THROWS_AS(sf_to_nd(P({6, 2}), 2, budget), std::invalid_argument);
    CHECK_THROWS_AS(sf_to_nd(P({3, 1}), 2, budget), std::invalid_argument);
    CHECK_THROWS_AS(nd_to_sf(P({4, 3}), 2), std::invalid_argument);
    CHECK_THROWS_AS(nd_to_sf(P({2, 2, 1}), 2), std::invalid_argument);
    CHECK(sf_to_nd(P({4, 2}), 2, budget) == P({4, 2}));
}

TEST_CASE("record carries direction and both sides") {
    BijectionRecord rec = map_partition(P({9, 2}), 3, MapDirection::sf_to_nd, budget);
    CHECK(rec.m == 3);
    CHECK(rec.direction == MapDirection::sf_to_nd);
    CHECK(rec.source == P({9, 2}));
    CHECK(rec.image == P({9, 1, 1}));

    BijectionRecord back = map_partition(rec.image, 3, MapDirection::nd_to_sf, budget);
    CHECK(back.image == rec.source);

    CHECK(to_string(MapDirection::sf_to_nd) == "sf_to_nd");
    CHECK(direction_from_string("nd_to_sf") == MapDirection::nd_to_sf);
    CHECK_THROWS_AS(direction_from_string("sideways"), std::invalid_argument);
}

TEST_CASE("roundtrip over every enumerated member") {
    for (std::uint64_t m : {2u, 3u, 4u}) {
        ModulusContext ctx(m);
        for (std::uint64_t n = 0; n <= 60; ++n) {
            PartitionSet sf_set = enumerate_sf(ctx, n, budget);
            PartitionSet nd_set = enumerate_nd(n, m, budget);
            std::vector<Partition> images;
            for (const Partition& p : sf_set.elements()) {
                Partition q = sf_to_nd(p, m, budget);
                CHECK(q.weight() == n);
                CHECK(is_nd(q, m));
                CHECK(nd_to_sf(q, m) == p);
                images.push_back(std::move(q));
            }
            // Injective with matching cardinalities: a bijection onto the target.
            CHECK(PartitionSet::of_weight(n, std::move(images)) == nd_set);
            for (const Partition& q : nd_set.elements())
                CHECK(is_semi_m_fib(nd_to_sf(q, m), m));
        }
    }
}

TEST_CASE("roundtrip on random members of larger sets") {
    std::mt19937 rng(12345);
    for (std::uint64_t m : {2u, 3u, 5u}) {
        ModulusContext ctx(m);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint64_t n = rng() % 120;
            if (ctx.sf_count(static_cast<long long>(n)) > 2000) continue;
            PartitionSet set = enumerate_sf(ctx, n, budget);
            if (set.size() == 0) continue;
            const Partition& p = set.elements()[rng() % set.size()];
            CHECK(nd_to_sf(sf_to_nd(p, m, budget), m) == p);
        }
    }
}
