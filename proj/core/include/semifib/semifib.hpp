#ifndef SEMIFIB_SEMIFIB_HPP
#define SEMIFIB_SEMIFIB_HPP

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semifib/budget.hpp"
#include "semifib/count.hpp"
#include "semifib/partition.hpp"

namespace semifib {

/* Memoized sf(n,m) for one fixed modulus m >= 2.
 *
 * The memo is a pure-function cache: an entry, once written, never changes.
 * All methods are safe to call concurrently on one context; lookups and the
 * computation both run under the lock, so concurrent callers serialize but
 * always observe identical values. */
class ModulusContext {
public:
    explicit ModulusContext(std::uint64_t m);

    std::uint64_t modulus() const { return m_; }

    /* sf(n,m); 0 for negative n, 1 for n = 0. */
    CountValue sf_count(long long n) const;

    std::size_t memo_size() const;

    /* Snapshot of all memoized (n, value) pairs, sorted by n. */
    std::vector<std::pair<std::uint64_t, CountValue>> memo_snapshot() const;

    /* Inserts a precomputed entry (cache import). If the entry is already
     * memoized the values must agree; a contradiction throws and the memo is
     * left unchanged. */
    void preload(std::uint64_t n, const CountValue& value);

private:
    CountValue sf_locked(std::uint64_t n) const;

    std::uint64_t m_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, CountValue> memo_;
};

/* Duplicate-free collection of partitions of one weight, kept in descending
 * lexicographic order for deterministic iteration and diffing. */
class PartitionSet {
public:
    PartitionSet() = default;

    /* Sorts, deduplicates, and checks every element has weight n. */
    static PartitionSet of_weight(std::uint64_t n, std::vector<Partition> elements);

    const std::vector<Partition>& elements() const { return elements_; }
    std::uint64_t weight() const { return weight_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Partition& p) const;

    friend bool operator==(const PartitionSet&, const PartitionSet&) = default;

private:
    std::vector<Partition> elements_;
    std::uint64_t weight_ = 0;
};

/* SF(n,m) by the recursive construction: base {(n)} for 1 <= n <= m, scaling
 * by m when m | n, and otherwise residue insertion plus promotion of the
 * unique part congruent to n mod m. Cardinality always equals sf_count(n).
 * Throws BudgetError when the set would exceed the element cap. */
PartitionSet enumerate_sf(const ModulusContext& ctx, std::uint64_t n,
                          const Budget& budget = Budget{});

/* Characterization predicate: parts have pairwise-distinct max m-powers and
 * at most one part is not divisible by m. The empty partition qualifies. */
bool is_semi_m_fib(const Partition& p, std::uint64_t m);

/* Reduction operations mirroring the construction. Each result carries what
 * is needed to reconstruct the inverse step. */
struct Tau1Result {
    Partition image;
    std::uint64_t removed_part;
};
struct Tau2Result {
    Partition image;
    std::size_t reduced_index;  // where the reduced part sits in the image
};
struct Tau3Result {
    Partition image;
};

bool tau1_applicable(const Partition& p, std::uint64_t m);
bool tau2_applicable(const Partition& p, std::uint64_t m, std::size_t t);
bool tau3_applicable(const Partition& p, std::uint64_t m);

Tau1Result tau1(const Partition& p, std::uint64_t m);  // last part < m: delete it
Tau2Result tau2(const Partition& p, std::uint64_t m, std::size_t t);  // subtract m at index t
Tau3Result tau3(const Partition& p, std::uint64_t m);  // divide every part by m

Partition tau1_inverse(const Partition& image, std::uint64_t removed_part);
Partition tau2_inverse(const Partition& image, std::uint64_t m, std::size_t index);
Partition tau3_inverse(const Partition& image, std::uint64_t m);

/* B(n,m): all partitions of n passing is_semi_m_fib, built by filtering the
 * brute-force generator. Independent of the recursive construction. */
PartitionSet b_set(std::uint64_t n, std::uint64_t m, const Budget& budget = Budget{});

} // namespace semifib

#endif
