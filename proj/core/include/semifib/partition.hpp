#ifndef SEMIFIB_PARTITION_HPP
#define SEMIFIB_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semifib/budget.hpp"

namespace semifib {

/* Canonical integer partition: a nonincreasing sequence of positive parts.
 * The empty sequence is the unique partition of 0. Immutable after
 * construction; safe to share across threads. */
class Partition {
public:
    Partition() = default;

    /* Sorts raw parts into canonical nonincreasing order.
     * Rejects nonpositive entries. */
    static Partition normalize(std::vector<std::uint64_t> raw_parts);

    /* Parts already in canonical order (checked). */
    static Partition from_sorted(std::vector<std::uint64_t> parts);

    const std::vector<std::uint64_t>& parts() const { return parts_; }
    std::uint64_t weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    std::uint64_t operator[](std::size_t i) const { return parts_[i]; }

    /* Lexicographic on the part sequence. Sets are kept in descending order,
     * which is also the order the brute-force generator emits. */
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

    std::string to_text() const;                      // "(8,3)"; "()" when empty
    static Partition parse(const std::string& text);  // accepts "8,3" or "(8,3)"

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t weight_ = 0;
};

struct MultiplicityEntry {
    std::uint64_t part;
    std::uint64_t multiplicity;
    friend bool operator==(const MultiplicityEntry&, const MultiplicityEntry&) = default;
};

/* Distinct-part view of a partition: parts strictly decreasing, every
 * multiplicity >= 1. Converting to and from Partition is lossless. */
class MultiplicityForm {
public:
    MultiplicityForm() = default;

    static MultiplicityForm from_partition(const Partition& p);

    /* Validates strictly decreasing positive parts and positive
     * multiplicities; rejects anything else. */
    static MultiplicityForm from_entries(std::vector<MultiplicityEntry> entries);

    const std::vector<MultiplicityEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::uint64_t weight() const { return weight_; }
    std::uint64_t part_count() const { return part_count_; }

    /* Expands to the canonical partition. Refuses to materialize more than
     * budget.enumeration_elements parts. */
    Partition expand(const Budget& budget = Budget{}) const;

    friend bool operator==(const MultiplicityForm&, const MultiplicityForm&) = default;

private:
    std::vector<MultiplicityEntry> entries_;
    std::uint64_t weight_ = 0;
    std::uint64_t part_count_ = 0;
};

/* N = base_u * m^exponent_s with m not dividing base_u; power = m^exponent_s
 * is the largest power of m dividing N. */
struct MaxMPowerDecomposition {
    std::uint64_t base_u;
    unsigned exponent_s;
    std::uint64_t power;
    friend bool operator==(const MaxMPowerDecomposition&, const MaxMPowerDecomposition&) = default;
};

/* Requires n >= 1 and m >= 2. */
MaxMPowerDecomposition max_m_power(std::uint64_t n, std::uint64_t m);

namespace detail {
template <typename Fn>
void partitions_rec(std::uint64_t remaining, std::uint64_t max_part,
                    std::vector<std::uint64_t>& prefix, Fn& fn) {
    if (remaining == 0) {
        fn(const_cast<const std::vector<std::uint64_t>&>(prefix));
        return;
    }
    std::uint64_t first = remaining < max_part ? remaining : max_part;
    for (std::uint64_t p = first; p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, fn);
        prefix.pop_back();
    }
}

void check_oracle_scale(std::uint64_t n, const Budget& budget);
} // namespace detail

/* Visits every partition of n exactly once, in lexicographically decreasing
 * order of the part sequence. The callback receives a reference to a buffer
 * that is reused between calls. Desk-scale oracle: refuses n above
 * budget.oracle_weight_limit. */
template <typename Fn>
void for_each_partition(std::uint64_t n, Fn&& fn, const Budget& budget = Budget{}) {
    detail::check_oracle_scale(n, budget);
    std::vector<std::uint64_t> prefix;
    if (n == 0) {
        fn(const_cast<const std::vector<std::uint64_t>&>(prefix));
        return;
    }
    prefix.reserve(n);
    detail::partitions_rec(n, n, prefix, fn);
}

std::vector<Partition> all_partitions(std::uint64_t n, const Budget& budget = Budget{});

MultiplicityForm to_multiplicity_form(const Partition& p);
Partition from_multiplicity_form(const MultiplicityForm& mf, const Budget& budget = Budget{});

} // namespace semifib

#endif
