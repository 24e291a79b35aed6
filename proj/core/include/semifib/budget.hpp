#ifndef SEMIFIB_BUDGET_HPP
#define SEMIFIB_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semifib {

/* Thrown when an enumeration or sweep would exceed its configured budget. */
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/* Resource guards.
 *
 * enumeration_elements caps the size of any partition set that gets
 * materialized (SF/ND enumeration, multiplicity-form expansion).
 * oracle_weight_limit caps the weight handled by the brute-force
 * all-partitions generator, which exists only as a desk-scale oracle.
 * sweep_limit caps the number of instances a single range sweep may touch.
 *
 * SEMIFIB_BUDGET=<N> in the environment overrides enumeration_elements and
 * sweep_limit with the same value.
 */
struct Budget {
    std::uint64_t enumeration_elements = 10'000;
    std::uint64_t oracle_weight_limit = 80;
    std::uint64_t sweep_limit = 1'000'000;

    static Budget from_env();
};

} // namespace semifib

#endif
