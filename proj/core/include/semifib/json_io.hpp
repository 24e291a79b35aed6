#ifndef SEMIFIB_JSON_IO_HPP
#define SEMIFIB_JSON_IO_HPP

/* Deterministic JSON/CSV rendering of the public value types.  Keys keep a
 * fixed order and big counts are decimal strings, so any JSON reader
 * round-trips them exactly. */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semifib/bijection.hpp"
#include "semifib/count.hpp"
#include "semifib/semifib.hpp"
#include "semifib/series.hpp"
#include "semifib/verify.hpp"

namespace semifib {

std::string count_json(std::uint64_t m, std::uint64_t n, const CountValue& count);
std::string counts_json(std::uint64_t m,
                        const std::vector<std::pair<std::uint64_t, CountValue>>& counts);

// {"n":...,"m":...,"count":"...","partitions":[[...],...]}; partitions omitted on request.
std::string partition_set_json(const PartitionSet& set, std::uint64_t m,
                               bool include_partitions);

std::string bijection_json(const BijectionRecord& record);

std::string report_json(const VerificationReport& report);
std::string reports_json(const std::vector<VerificationReport>& reports);

std::string series_json(const PowerSeries& series);
std::string series_csv(const PowerSeries& series);

} // namespace semifib

#endif
