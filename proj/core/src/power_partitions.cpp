#include "semifib/power_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace semifib {

namespace {

bool is_power_of(std::uint64_t part, std::uint64_t m) {
    if (part == 0) return false;
    while (part % m == 0) part /= m;
    return part == 1;
}

} // namespace

bool is_nd(const Partition& p, std::uint64_t m) {
    return is_nd(to_multiplicity_form(p), m);
}

bool is_nd(const MultiplicityForm& mf, std::uint64_t m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2");
    for (const auto& [part, mult] : mf.entries()) {
        if (!is_power_of(part, m)) return false;
        if (mult % m == 0) return false;
    }
    return true;
}

namespace {

/* Depth-first over power levels, largest first, choosing an admissible
 * multiplicity (zero or not divisible by m) at each level. */
void nd_rec(std::uint64_t remaining, std::uint64_t m, std::vector<std::uint64_t>& powers,
            std::size_t level, std::vector<std::uint64_t>& parts,
            std::vector<Partition>& out, const Budget& budget) {
    if (remaining == 0) {
        out.push_back(Partition::from_sorted(parts));
        if (out.size() > budget.enumeration_elements)
            throw BudgetError("power-partition enumeration exceeds the budget of " +
                              std::to_string(budget.enumeration_elements) + " elements");
        return;
    }
    if (level == powers.size()) return;
    const std::uint64_t pw = powers[level];
    const std::uint64_t max_mult = remaining / pw;
    for (std::uint64_t mult = 0; mult <= max_mult; ++mult) {
        if (mult != 0 && mult % m == 0) continue;
        if (mult > 0) parts.insert(parts.end(), mult, pw);
        nd_rec(remaining - mult * pw, m, powers, level + 1, parts, out, budget);
        if (mult > 0) parts.resize(parts.size() - mult);
    }
}

} // namespace

PartitionSet enumerate_nd(std::uint64_t n, std::uint64_t m, const Budget& budget) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2");
    std::vector<std::uint64_t> powers{1};
    while (powers.back() <= n / m) powers.push_back(powers.back() * m);
    std::sort(powers.begin(), powers.end(), std::greater<>());

    std::vector<Partition> out;
    std::vector<std::uint64_t> parts;
    nd_rec(n, m, powers, 0, parts, out, budget);
    return PartitionSet::of_weight(n, std::move(out));
}

NdCounter::NdCounter(std::uint64_t m) : m_(m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2");
}

void NdCounter::extend(std::uint64_t n_max) {
    const std::size_t want = static_cast<std::size_t>(n_max) + 1;
    const std::size_t have = rows_.empty() ? 0 : rows_[0].size();
    if (want <= have) return;

    // Level 0: only 1s, so the multiplicity is n itself.
    if (rows_.empty()) rows_.emplace_back();
    auto& row0 = rows_[0];
    row0.reserve(want);
    for (std::size_t n = row0.size(); n < want; ++n)
        row0.emplace_back((n == 0 || n % m_ != 0) ? 1 : 0);

    // Levels j >= 1 while m^j fits; create new levels as the range grows.
    std::uint64_t power = 1;
    for (std::size_t j = 1;; ++j) {
        if (power > n_max / m_) break;
        power *= m_;
        if (j == rows_.size()) {
            // New level: below m^j it coincides with the previous row.
            rows_.emplace_back(rows_[j - 1].begin(),
                               rows_[j - 1].begin() +
                                   static_cast<std::ptrdiff_t>(std::min<std::uint64_t>(power, have)));
        }
        auto& row = rows_[j];
        const auto& prev = rows_[j - 1];
        row.reserve(want);
        for (std::size_t n = row.size(); n < want; ++n) {
            CountValue v = prev[n];
            for (std::uint64_t u = 1; u * power <= n; ++u) {
                if (u % m_ == 0) continue;
                v += prev[n - u * power];
            }
            row.emplace_back(std::move(v));
        }
    }
}

CountValue NdCounter::count(std::uint64_t n) {
    extend(n);
    return rows_.back()[n];
}

std::vector<CountValue> NdCounter::counts_upto(std::uint64_t n_max) {
    extend(n_max);
    const auto& last = rows_.back();
    return std::vector<CountValue>(last.begin(),
                                   last.begin() + static_cast<std::ptrdiff_t>(n_max) + 1);
}

CountValue nd_count(std::uint64_t n, std::uint64_t m) {
    NdCounter counter(m);
    return counter.count(n);
}

} // namespace semifib
