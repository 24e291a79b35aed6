#include "semifib/semifib.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace semifib {

ModulusContext::ModulusContext(std::uint64_t m) : m_(m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2");
}

CountValue ModulusContext::sf_count(long long n) const {
    if (n < 0) return 0;
    std::lock_guard lock(mu_);
    return sf_locked(static_cast<std::uint64_t>(n));
}

/* Iterative top-down evaluation with an explicit work stack: chains of
 * n -> n-m can be n/m long, which would overflow the call stack on large
 * dense sweeps. */
CountValue ModulusContext::sf_locked(std::uint64_t n) const {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<std::uint64_t> work{n};
    while (!work.empty()) {
        const std::uint64_t k = work.back();
        if (memo_.contains(k)) {
            work.pop_back();
            continue;
        }
        if (k == 0) {
            memo_.emplace(0, 1);
            work.pop_back();
            continue;
        }
        const std::uint64_t r = k % m_;
        if (r == 0) {
            const std::uint64_t d = k / m_;
            if (auto it = memo_.find(d); it != memo_.end()) {
                CountValue v = it->second;
                memo_.emplace(k, std::move(v));
                work.pop_back();
            } else {
                work.push_back(d);
            }
        } else {
            const std::uint64_t a = k - r;  // largest multiple of m below k
            const bool have_b = k >= m_;
            auto ita = memo_.find(a);
            auto itb = have_b ? memo_.find(k - m_) : memo_.end();
            if (ita != memo_.end() && (!have_b || itb != memo_.end())) {
                CountValue v = ita->second;
                if (have_b) v += itb->second;
                memo_.emplace(k, std::move(v));
                work.pop_back();
            } else {
                if (ita == memo_.end()) work.push_back(a);
                if (have_b && itb == memo_.end()) work.push_back(k - m_);
            }
        }
    }
    return memo_.at(n);
}

std::size_t ModulusContext::memo_size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
}

std::vector<std::pair<std::uint64_t, CountValue>> ModulusContext::memo_snapshot() const {
    std::lock_guard lock(mu_);
    std::vector<std::pair<std::uint64_t, CountValue>> out(memo_.begin(), memo_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void ModulusContext::preload(std::uint64_t n, const CountValue& value) {
    std::lock_guard lock(mu_);
    auto [it, inserted] = memo_.try_emplace(n, value);
    if (!inserted && it->second != value)
        throw std::invalid_argument("preloaded sf(" + std::to_string(n) + "," +
                                    std::to_string(m_) + ") contradicts the memoized value");
}

PartitionSet PartitionSet::of_weight(std::uint64_t n, std::vector<Partition> elements) {
    for (const auto& p : elements)
        if (p.weight() != n)
            throw std::invalid_argument("partition of weight " + std::to_string(p.weight()) +
                                        " in a set of weight " + std::to_string(n));
    std::sort(elements.begin(), elements.end(), std::greater<>());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PartitionSet s;
    s.elements_ = std::move(elements);
    s.weight_ = n;
    return s;
}

bool PartitionSet::contains(const Partition& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p, std::greater<>());
    return it != elements_.end() && *it == p;
}

namespace {

/* Insert r (r < every part) at the end; sortedness is preserved. */
Partition with_residue_appended(const Partition& p, std::uint64_t r) {
    std::vector<std::uint64_t> parts = p.parts();
    parts.push_back(r);
    return Partition::from_sorted(std::move(parts));
}

/* Add m to the unique part congruent to r (mod m); Lemma-1 structure of the
 * source guarantees exactly one such part. */
Partition with_residue_promoted(const Partition& p, std::uint64_t m, std::uint64_t r) {
    std::vector<std::uint64_t> parts = p.parts();
    std::size_t hits = 0, at = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % m == r) {
            ++hits;
            at = i;
        }
    }
    assert(hits == 1);
    (void)hits;
    parts[at] += m;
    return Partition::normalize(std::move(parts));
}

} // namespace

PartitionSet enumerate_sf(const ModulusContext& ctx, std::uint64_t n, const Budget& budget) {
    const std::uint64_t m = ctx.modulus();
    if (ctx.sf_count(static_cast<long long>(n)) > budget.enumeration_elements)
        throw BudgetError("SF(" + std::to_string(n) + "," + std::to_string(m) +
                          ") exceeds the enumeration budget of " +
                          std::to_string(budget.enumeration_elements) + " elements");

    // Dependency closure, then bottom-up assembly in ascending weight order.
    std::set<std::uint64_t> needed;
    std::vector<std::uint64_t> work{n};
    while (!work.empty()) {
        std::uint64_t k = work.back();
        work.pop_back();
        if (!needed.insert(k).second) continue;
        if (k <= m) continue;  // base cases
        if (k % m == 0) {
            work.push_back(k / m);
        } else {
            work.push_back(k - (k % m));
            work.push_back(k - m);
        }
    }

    std::unordered_map<std::uint64_t, std::vector<Partition>> sets;
    for (std::uint64_t k : needed) {  // std::set iterates ascending
        std::vector<Partition> sk;
        if (k == 0) {
            sk.push_back(Partition{});
        } else if (k <= m) {
            sk.push_back(Partition::from_sorted({k}));
        } else if (k % m == 0) {
            const auto& src = sets.at(k / m);
            sk.reserve(src.size());
            for (const Partition& p : src) {
                std::vector<std::uint64_t> parts = p.parts();
                for (auto& v : parts) v *= m;
                sk.push_back(Partition::from_sorted(std::move(parts)));
            }
        } else {
            const std::uint64_t r = k % m;
            const auto& inserted_src = sets.at(k - r);
            const auto& promoted_src = sets.at(k - m);
            sk.reserve(inserted_src.size() + promoted_src.size());
            for (const Partition& p : inserted_src) sk.push_back(with_residue_appended(p, r));
            for (const Partition& p : promoted_src) sk.push_back(with_residue_promoted(p, m, r));
            const std::size_t before = sk.size();
            std::sort(sk.begin(), sk.end(), std::greater<>());
            sk.erase(std::unique(sk.begin(), sk.end()), sk.end());
            // The two sources are disjoint; a collision means a bug.
            assert(sk.size() == before);
            (void)before;
        }
        if (sk.size() > budget.enumeration_elements)
            throw BudgetError("SF(" + std::to_string(k) + "," + std::to_string(m) +
                              ") exceeds the enumeration budget");
        sets.emplace(k, std::move(sk));
    }
    return PartitionSet::of_weight(n, std::move(sets.at(n)));
}

bool is_semi_m_fib(const Partition& p, std::uint64_t m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2");
    std::vector<std::uint64_t> powers;
    powers.reserve(p.size());
    std::size_t non_multiples = 0;
    for (std::uint64_t part : p.parts()) {
        auto d = max_m_power(part, m);
        powers.push_back(d.power);
        if (part % m != 0) ++non_multiples;
    }
    if (non_multiples > 1) return false;
    std::sort(powers.begin(), powers.end());
    return std::adjacent_find(powers.begin(), powers.end()) == powers.end();
}

bool tau1_applicable(const Partition& p, std::uint64_t m) {
    return !p.empty() && p.parts().back() < m;
}

bool tau2_applicable(const Partition& p, std::uint64_t m, std::size_t t) {
    return t < p.size() && p[t] > m && p[t] % m != 0;
}

bool tau3_applicable(const Partition& p, std::uint64_t m) {
    if (p.empty()) return false;
    for (std::uint64_t part : p.parts())
        if (part % m != 0) return false;
    return true;
}

Tau1Result tau1(const Partition& p, std::uint64_t m) {
    if (!tau1_applicable(p, m))
        throw std::invalid_argument("tau1 requires a last part smaller than m");
    std::vector<std::uint64_t> parts = p.parts();
    std::uint64_t removed = parts.back();
    parts.pop_back();
    return {Partition::from_sorted(std::move(parts)), removed};
}

Tau2Result tau2(const Partition& p, std::uint64_t m, std::size_t t) {
    if (!tau2_applicable(p, m, t))
        throw std::invalid_argument(
            "tau2 requires an index t with part > m and part not divisible by m");
    std::vector<std::uint64_t> parts = p.parts();
    const std::uint64_t reduced = parts[t] - m;
    parts[t] = reduced;
    Partition image = Partition::normalize(std::move(parts));
    std::size_t at = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i] == reduced) {
            at = i;
            break;
        }
    }
    return {std::move(image), at};
}

Tau3Result tau3(const Partition& p, std::uint64_t m) {
    if (!tau3_applicable(p, m))
        throw std::invalid_argument("tau3 requires every part divisible by m");
    std::vector<std::uint64_t> parts = p.parts();
    for (auto& v : parts) v /= m;
    return {Partition::from_sorted(std::move(parts))};
}

Partition tau1_inverse(const Partition& image, std::uint64_t removed_part) {
    std::vector<std::uint64_t> parts = image.parts();
    parts.push_back(removed_part);
    return Partition::normalize(std::move(parts));
}

Partition tau2_inverse(const Partition& image, std::uint64_t m, std::size_t index) {
    if (index >= image.size())
        throw std::invalid_argument("tau2_inverse index out of range");
    std::vector<std::uint64_t> parts = image.parts();
    parts[index] += m;
    return Partition::normalize(std::move(parts));
}

Partition tau3_inverse(const Partition& image, std::uint64_t m) {
    std::vector<std::uint64_t> parts = image.parts();
    for (auto& v : parts) {
        if (__builtin_mul_overflow(v, m, &v))
            throw std::invalid_argument("tau3_inverse overflows 64 bits");
    }
    return Partition::from_sorted(std::move(parts));
}

PartitionSet b_set(std::uint64_t n, std::uint64_t m, const Budget& budget) {
    std::vector<Partition> members;
    for_each_partition(
        n,
        [&](const std::vector<std::uint64_t>& parts) {
            Partition p = Partition::from_sorted(parts);
            if (is_semi_m_fib(p, m)) members.push_back(std::move(p));
        },
        budget);
    return PartitionSet::of_weight(n, std::move(members));
}

} // namespace semifib
