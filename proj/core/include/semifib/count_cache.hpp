#ifndef SEMIFIB_COUNT_CACHE_HPP
#define SEMIFIB_COUNT_CACHE_HPP

/* Persistence of memoized counts as a line-oriented text file:
 * a "semifib-cache v1" header followed by "m n value" lines. */

#include <cstdint>
#include <string>
#include <vector>

#include "semifib/count.hpp"
#include "semifib/semifib.hpp"

namespace semifib {

struct CacheEntry {
    std::uint64_t m;
    std::uint64_t n;
    CountValue value;
};

// Writes every memoized value of each context; rows sorted by (m, n).
// Returns the number of data lines written.
std::size_t cache_export(const std::vector<const ModulusContext*>& contexts,
                         const std::string& path);

/* Reads and validates a cache file.  Every hundredth row (and the last row)
 * is re-derived from the recurrence and compared; any format violation or
 * value mismatch rejects the whole file — no partial import.  Returns the
 * validated entries for preloading. */
std::vector<CacheEntry> cache_import(const std::string& path);

} // namespace semifib

#endif
