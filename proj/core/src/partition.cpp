#include "semifib/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace semifib {

namespace {
std::uint64_t checked_weight(const std::vector<std::uint64_t>& parts) {
    std::uint64_t w = 0;
    for (std::uint64_t p : parts) {
        if (p == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (__builtin_add_overflow(w, p, &w))
            throw std::invalid_argument("partition weight overflows 64 bits");
    }
    return w;
}
} // namespace

Partition Partition::normalize(std::vector<std::uint64_t> raw_parts) {
    std::uint64_t w = checked_weight(raw_parts);
    std::sort(raw_parts.begin(), raw_parts.end(), std::greater<>());
    Partition p;
    p.parts_ = std::move(raw_parts);
    p.weight_ = w;
    return p;
}

Partition Partition::from_sorted(std::vector<std::uint64_t> parts) {
    std::uint64_t w = checked_weight(parts);
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i])
            throw std::invalid_argument("parts not in nonincreasing order");
    Partition p;
    p.parts_ = std::move(parts);
    p.weight_ = w;
    return p;
}

std::string Partition::to_text() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<std::uint64_t> parts;
    if (!s.empty()) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed partition text: \"" + text + "\"");
            errno = 0;
            char* end = nullptr;
            unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
            if (errno != 0 || end == tok.c_str() || *end != '\0')
                throw std::invalid_argument("malformed partition part: \"" + tok + "\"");
            parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return normalize(std::move(parts));
}

MultiplicityForm MultiplicityForm::from_partition(const Partition& p) {
    MultiplicityForm mf;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mf.entries_.push_back({parts[i], j - i});
        i = j;
    }
    mf.weight_ = p.weight();
    mf.part_count_ = parts.size();
    return mf;
}

MultiplicityForm MultiplicityForm::from_entries(std::vector<MultiplicityEntry> entries) {
    MultiplicityForm mf;
    std::uint64_t weight = 0, count = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.part == 0)
            throw std::invalid_argument("multiplicity-form parts must be positive");
        if (e.multiplicity == 0)
            throw std::invalid_argument("multiplicities must be >= 1");
        if (i > 0 && entries[i - 1].part <= e.part)
            throw std::invalid_argument("multiplicity-form parts must be strictly decreasing");
        std::uint64_t contrib;
        if (__builtin_mul_overflow(e.part, e.multiplicity, &contrib) ||
            __builtin_add_overflow(weight, contrib, &weight) ||
            __builtin_add_overflow(count, e.multiplicity, &count))
            throw std::invalid_argument("multiplicity form overflows 64 bits");
    }
    mf.entries_ = std::move(entries);
    mf.weight_ = weight;
    mf.part_count_ = count;
    return mf;
}

Partition MultiplicityForm::expand(const Budget& budget) const {
    if (part_count_ > budget.enumeration_elements)
        throw BudgetError("expanding multiplicity form would materialize " +
                          std::to_string(part_count_) + " parts (budget " +
                          std::to_string(budget.enumeration_elements) + ")");
    std::vector<std::uint64_t> parts;
    parts.reserve(part_count_);
    for (const auto& e : entries_)
        parts.insert(parts.end(), e.multiplicity, e.part);
    return Partition::from_sorted(std::move(parts));
}

MultiplicityForm to_multiplicity_form(const Partition& p) {
    return MultiplicityForm::from_partition(p);
}

Partition from_multiplicity_form(const MultiplicityForm& mf, const Budget& budget) {
    return mf.expand(budget);
}

MaxMPowerDecomposition max_m_power(std::uint64_t n, std::uint64_t m) {
    if (n < 1)
        throw std::invalid_argument("max_m_power requires N >= 1");
    if (m < 2)
        throw std::invalid_argument("max_m_power requires m >= 2");
    MaxMPowerDecomposition d{n, 0, 1};
    while (d.base_u % m == 0) {
        d.base_u /= m;
        d.power *= m;
        ++d.exponent_s;
    }
    return d;
}

namespace detail {
void check_oracle_scale(std::uint64_t n, const Budget& budget) {
    if (n > budget.oracle_weight_limit)
        throw BudgetError("partition enumeration is oracle-scale only: n=" +
                          std::to_string(n) + " exceeds the limit " +
                          std::to_string(budget.oracle_weight_limit));
}
} // namespace detail

std::vector<Partition> all_partitions(std::uint64_t n, const Budget& budget) {
    std::vector<Partition> out;
    for_each_partition(
        n, [&](const std::vector<std::uint64_t>& parts) { out.push_back(Partition::from_sorted(parts)); },
        budget);
    return out;
}

} // namespace semifib
