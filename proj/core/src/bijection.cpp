#include "semifib/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "semifib/power_partitions.hpp"
#include "semifib/semifib.hpp"

namespace semifib {

std::string to_string(MapDirection d) {
    return d == MapDirection::sf_to_nd ? "sf_to_nd" : "nd_to_sf";
}

MapDirection direction_from_string(const std::string& s) {
    if (s == "sf_to_nd") return MapDirection::sf_to_nd;
    if (s == "nd_to_sf") return MapDirection::nd_to_sf;
    throw std::invalid_argument("unknown direction '" + s + "' (expected sf_to_nd or nd_to_sf)");
}

MultiplicityForm sf_to_nd_form(const Partition& p, std::uint64_t m) {
    if (!is_semi_m_fib(p, m))
        throw std::invalid_argument(p.to_text() + " is not a semi-" + std::to_string(m) +
                                    "-Fibonacci partition");
    // Parts arrive in descending order but their max powers need not be;
    // sort by power.  Distinctness of the powers is exactly what
    // is_semi_m_fib guaranteed.
    std::vector<MultiplicityEntry> entries;
    entries.reserve(p.size());
    for (std::uint64_t part : p.parts()) {
        auto d = max_m_power(part, m);
        entries.push_back({d.power, d.base_u});
    }
    std::sort(entries.begin(), entries.end(),
              [](const MultiplicityEntry& a, const MultiplicityEntry& b) {
                  return a.part > b.part;
              });
    return MultiplicityForm::from_entries(std::move(entries));
}

Partition sf_to_nd(const Partition& p, std::uint64_t m, const Budget& budget) {
    return sf_to_nd_form(p, m).expand(budget);
}

Partition nd_to_sf(const Partition& p, std::uint64_t m) {
    MultiplicityForm mf = to_multiplicity_form(p);
    if (!is_nd(mf, m))
        throw std::invalid_argument(p.to_text() + " is not a power-of-" + std::to_string(m) +
                                    " partition with admissible multiplicities");
    std::vector<std::uint64_t> parts;
    parts.reserve(mf.entries().size());
    for (const auto& [power, mult] : mf.entries()) {
        std::uint64_t part;
        if (__builtin_mul_overflow(power, mult, &part))
            throw std::invalid_argument("mapped part overflows 64 bits");
        parts.push_back(part);
    }
    return Partition::normalize(std::move(parts));
}

BijectionRecord map_partition(const Partition& p, std::uint64_t m, MapDirection direction,
                              const Budget& budget) {
    Partition image = direction == MapDirection::sf_to_nd ? sf_to_nd(p, m, budget)
                                                          : nd_to_sf(p, m);
    return {m, direction, p, std::move(image)};
}

} // namespace semifib
