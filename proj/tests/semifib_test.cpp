#include <doctest.h>

#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "semifib/semifib.hpp"

#include "oracles.hpp"

using namespace semifib;

namespace {

Partition P(std::initializer_list<std::uint64_t> parts) {
    return Partition::normalize(std::vector<std::uint64_t>(parts));
}

} // namespace

TEST_CASE("count base cases and small values") {
    ModulusContext ctx3(3);
    CHECK(ctx3.sf_count(0) == 1);
    CHECK(ctx3.sf_count(-1) == 0);
    CHECK(ctx3.sf_count(-100) == 0);
    const std::uint64_t expected[] = {1, 1, 1, 2, 2, 1, 3, 3, 1, 4};
    for (int n = 1; n <= 10; ++n)
        CHECK(ctx3.sf_count(n) == expected[n - 1]);

    ModulusContext ctx2(2);
    CHECK(ctx2.sf_count(9) == 6);
    CHECK(ctx2.sf_count(2000) == 3707);
    CHECK(ctx2.sf_count(500) == 3707);  // 2000 halves down to the same odd core

    CHECK_THROWS_AS(ModulusContext(1), std::invalid_argument);
    CHECK_THROWS_AS(ModulusContext(0), std::invalid_argument);
}

TEST_CASE("counts agree with the plainly transcribed recurrence") {
    for (std::uint64_t m : {2u, 3u, 5u, 7u}) {
        ModulusContext ctx(m);
        for (long long n = 0; n <= 300; ++n)
            CHECK(ctx.sf_count(n) == oracles::sf_reference(n, m));
    }
}

TEST_CASE("deep arguments do not overflow the call stack") {
    ModulusContext ctx(2);
    // An odd probe forces the ~50k-link subtract-2 spine; naive recursion
    // would blow the stack here.
    CountValue big = ctx.sf_count(99999);
    CHECK(big > 0);
    CHECK(is_even(big));  // 3 | 99999, so the parity law demands an even count
    CHECK(ctx.memo_size() > 50000);

    // Even arguments halve away instead: a sparse closure and a value the
    // plain recursive transcription can confirm at the odd core.
    ModulusContext sparse(2);
    CHECK(sparse.sf_count(100000) == oracles::sf_reference(3125, 2));  // 100000 = 2^5 * 3125
    CHECK(sparse.memo_size() < 20000);
}

TEST_CASE("memo snapshot is sorted and preload verifies") {
    ModulusContext ctx(3);
    ctx.sf_count(50);
    auto snap = ctx.memo_snapshot();
    REQUIRE(!snap.empty());
    for (std::size_t i = 1; i < snap.size(); ++i)
        CHECK(snap[i - 1].first < snap[i].first);

    ctx.preload(50, ctx.sf_count(50));       // matching value: fine
    CHECK_THROWS_AS(ctx.preload(50, 999), std::invalid_argument);
    ctx.preload(1000000007, 12345);          // fresh value is accepted as-is
    CHECK(ctx.sf_count(1000000007) == 12345);
}

TEST_CASE("enumerated sets match the published example") {
    ModulusContext ctx(3);
    Budget budget;
    PartitionSet s10 = enumerate_sf(ctx, 10, budget);
    REQUIRE(s10.size() == 4);
    CHECK(s10.contains(P({10})));
    CHECK(s10.contains(P({6, 4})));
    CHECK(s10.contains(P({7, 3})));
    CHECK(s10.contains(P({9, 1})));
    CHECK(s10.weight() == 10);

    PartitionSet s0 = enumerate_sf(ctx, 0, budget);
    REQUIRE(s0.size() == 1);
    CHECK(s0.elements()[0].empty());

    PartitionSet s3 = enumerate_sf(ctx, 3, budget);
    REQUIRE(s3.size() == 1);
    CHECK(s3.contains(P({3})));
}

TEST_CASE("enumeration cardinality equals the count everywhere tested") {
    Budget budget;
    for (std::uint64_t m : {2u, 3u, 4u}) {
        ModulusContext ctx(m);
        for (std::uint64_t n = 0; n <= 80; ++n) {
            PartitionSet set = enumerate_sf(ctx, n, budget);
            CHECK(ctx.sf_count(static_cast<long long>(n)) ==
                  CountValue(static_cast<unsigned long>(set.size())));
            for (const Partition& p : set.elements()) CHECK(p.weight() == n);
        }
    }
}

TEST_CASE("enumeration respects the element budget") {
    ModulusContext ctx(2);
    Budget tight;
    tight.enumeration_elements = 5;
    CHECK_THROWS_AS(enumerate_sf(ctx, 9, tight), BudgetError);  // 6 partitions
    CHECK(enumerate_sf(ctx, 8, tight).size() == 1);
}

TEST_CASE("membership predicate matches enumeration") {
    Budget budget;
    for (std::uint64_t m : {2u, 3u}) {
        ModulusContext ctx(m);
        for (std::uint64_t n = 1; n <= 25; ++n) {
            PartitionSet sf_set = enumerate_sf(ctx, n, budget);
            for_each_partition(
                n,
                [&](const std::vector<std::uint64_t>& parts) {
                    Partition p = Partition::from_sorted(parts);
                    CHECK(is_semi_m_fib(p, m) == sf_set.contains(p));
                },
                budget);
        }
    }
}

TEST_CASE("membership predicate on handpicked partitions") {
    CHECK(is_semi_m_fib(P({4, 2}), 2));
    CHECK_FALSE(is_semi_m_fib(P({6, 2}), 2));  // equal max powers 2 and 2
    CHECK_FALSE(is_semi_m_fib(P({3, 1}), 2));  // two odd parts
    CHECK(is_semi_m_fib(P({9, 1}), 3));
    CHECK_FALSE(is_semi_m_fib(P({5, 5, 1}), 3));
    CHECK(is_semi_m_fib(Partition{}, 5));
}

TEST_CASE("partition sets deduplicate and validate weights") {
    auto set = PartitionSet::of_weight(5, {P({4, 1}), P({4, 1}), P({5})});
    CHECK(set.size() == 2);
    CHECK(set.elements()[0] == P({5}));  // descending lexicographic order
    CHECK_THROWS_AS(PartitionSet::of_weight(5, {P({4})}), std::invalid_argument);
}

TEST_CASE("tau reductions and their inverses") {
    SUBCASE("removing the trailing small part") {
        CHECK(tau1_applicable(P({9, 1}), 3));
        auto res = tau1(P({9, 1}), 3);
        CHECK(res.image == P({9}));
        CHECK(res.removed_part == 1);
        CHECK(tau1_inverse(res.image, res.removed_part) == P({9, 1}));
        CHECK_FALSE(tau1_applicable(P({9}), 3));
        CHECK_FALSE(tau1_applicable(Partition{}, 3));
        CHECK_THROWS_AS(tau1(P({9}), 3), std::invalid_argument);
    }
    SUBCASE("reducing the distinguished residue part") {
        Partition p = P({7, 3});
        REQUIRE(tau2_applicable(p, 3, 0));
        auto res = tau2(p, 3, 0);
        CHECK(res.image == P({4, 3}));
        CHECK(res.image[res.reduced_index] == 4);
        CHECK(tau2_inverse(res.image, 3, res.reduced_index) == p);
        CHECK_FALSE(tau2_applicable(P({3, 1}), 3, 1));  // part 1 is not > m
        CHECK_FALSE(tau2_applicable(P({9, 6}), 3, 0));  // multiples of m
        CHECK_THROWS_AS(tau2(P({9, 6}), 3, 0), std::invalid_argument);
    }
    SUBCASE("reduction can reorder parts") {
        Partition p = P({7, 6});
        auto res = tau2(p, 3, 0);
        CHECK(res.image == P({6, 4}));
        CHECK(res.image[res.reduced_index] == 4);
        CHECK(tau2_inverse(res.image, 3, res.reduced_index) == p);
    }
    SUBCASE("scaling all parts down") {
        CHECK(tau3_applicable(P({9, 6}), 3));
        auto res = tau3(P({9, 6}), 3);
        CHECK(res.image == P({3, 2}));
        CHECK(tau3_inverse(res.image, 3) == P({9, 6}));
        CHECK_FALSE(tau3_applicable(P({9, 1}), 3));
        CHECK_FALSE(tau3_applicable(Partition{}, 3));
        CHECK_THROWS_AS(tau3(P({9, 1}), 3), std::invalid_argument);
    }
}

TEST_CASE("max-power filter set equals the recursive construction") {
    Budget budget;
    for (std::uint64_t m : {2u, 3u, 4u}) {
        ModulusContext ctx(m);
        for (std::uint64_t n = 0; n <= 30; ++n)
            CHECK(b_set(n, m, budget) == enumerate_sf(ctx, n, budget));
    }
}

TEST_CASE("counts are usable concurrently") {
    ModulusContext ctx(2);
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&ctx, &ok, t] {
            std::mt19937 rng(1000 + t);
            for (int i = 0; i < 200; ++i) {
                long long n = static_cast<long long>(rng() % 5000);
                std::map<long long, semifib::CountValue> memo;
                if (ctx.sf_count(n) != oracles::sf_reference(n, 2, memo)) ok = false;
            }
        });
    for (auto& w : workers) w.join();
    CHECK(ok.load());
}
