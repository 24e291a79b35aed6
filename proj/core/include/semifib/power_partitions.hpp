#ifndef SEMIFIB_POWER_PARTITIONS_HPP
#define SEMIFIB_POWER_PARTITIONS_HPP

/* Partitions of n into powers of m in which no multiplicity is divisible
 * by m, together with a counting route that never touches the semi-Fibonacci
 * recurrence (useful as a cross-check). */

#include <cstdint>
#include <vector>

#include "semifib/budget.hpp"
#include "semifib/count.hpp"
#include "semifib/partition.hpp"
#include "semifib/semifib.hpp"

namespace semifib {

// Every part a power of m, every multiplicity not divisible by m.
bool is_nd(const Partition& p, std::uint64_t m);
bool is_nd(const MultiplicityForm& mf, std::uint64_t m);

// All such partitions of n, in the usual descending-lex set order.
PartitionSet enumerate_nd(std::uint64_t n, std::uint64_t m, const Budget& budget);

/* Row-extendable counter: f_j(n) counts the partitions of n into powers
 * m^0..m^j with admissible multiplicities.  Adding one more power level is
 * a single convolution pass, so sweeps over n share all the work. */
class NdCounter {
public:
    explicit NdCounter(std::uint64_t m);

    std::uint64_t modulus() const { return m_; }

    // Count for a single n; grows the table as needed.
    CountValue count(std::uint64_t n);

    // Counts for 0..n_max as a dense vector.
    std::vector<CountValue> counts_upto(std::uint64_t n_max);

private:
    void extend(std::uint64_t n_max);

    std::uint64_t m_;
    // rows_[j][n] = partitions of n into m^0..m^j with admissible multiplicities
    std::vector<std::vector<CountValue>> rows_;
};

// One-shot convenience wrapper around NdCounter.
CountValue nd_count(std::uint64_t n, std::uint64_t m);

} // namespace semifib

#endif
