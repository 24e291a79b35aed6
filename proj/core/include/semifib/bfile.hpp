#ifndef SEMIFIB_BFILE_HPP
#define SEMIFIB_BFILE_HPP

/* OEIS-style b-file parsing ("index value" lines) and cross-checking of the
 * recurrence counts against such a reference sequence. */

#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semifib/count.hpp"
#include "semifib/semifib.hpp"
#include "semifib/verify.hpp"

namespace semifib {

struct BFile {
    std::vector<std::pair<long long, CountValue>> entries;  // strictly increasing indices
    std::string source_path;

    // '#' comment lines and blank lines are skipped; anything else malformed throws.
    static BFile parse_file(const std::string& path);
    static BFile parse_text(const std::string& text, std::string source_path = "<memory>");
};

inline constexpr long long offset_auto = LLONG_MAX;

/* Compares sf counts against the reference values.  offset = offset_auto
 * tries shifts {0,-1,+1} against the first ten entries and records the chosen
 * shift in the report note; a fixed offset is used as given.  max_n = 0 means
 * no cap. */
VerificationReport oeis_check(const BFile& bfile, std::uint64_t m, long long offset,
                              std::uint64_t max_n);

} // namespace semifib

#endif
