#ifndef SEMIFIB_BIJECTION_HPP
#define SEMIFIB_BIJECTION_HPP

/* Weight-preserving bijection between the semi-m-Fibonacci partitions of n
 * and the partitions of n into powers of m with no multiplicity divisible
 * by m: a part t = m^i * h (m does not divide h) becomes h copies of m^i,
 * and back. */

#include <cstdint>
#include <string>

#include "semifib/budget.hpp"
#include "semifib/partition.hpp"

namespace semifib {

enum class MapDirection { sf_to_nd, nd_to_sf };

std::string to_string(MapDirection d);
MapDirection direction_from_string(const std::string& s);

struct BijectionRecord {
    std::uint64_t m;
    MapDirection direction;
    Partition source;
    Partition image;
};

// Forward image in multiplicity form; cheap even when the image has many parts.
MultiplicityForm sf_to_nd_form(const Partition& p, std::uint64_t m);

// Expanded forward image; the expansion is budget-guarded.
Partition sf_to_nd(const Partition& p, std::uint64_t m, const Budget& budget);

Partition nd_to_sf(const Partition& p, std::uint64_t m);

// Validates the source against the direction's domain, then maps.
BijectionRecord map_partition(const Partition& p, std::uint64_t m, MapDirection direction,
                              const Budget& budget);

} // namespace semifib

#endif
