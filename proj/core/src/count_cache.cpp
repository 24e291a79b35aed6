#include "semifib/count_cache.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace semifib {

namespace {

constexpr const char* cache_header = "semifib-cache v1";

} // namespace

std::size_t cache_export(const std::vector<const ModulusContext*>& contexts,
                         const std::string& path) {
    std::vector<const ModulusContext*> ordered = contexts;
    std::sort(ordered.begin(), ordered.end(),
              [](const ModulusContext* a, const ModulusContext* b) {
                  return a->modulus() < b->modulus();
              });
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write cache file '" + path + "'");
    out << cache_header << '\n';
    std::size_t rows = 0;
    for (const ModulusContext* ctx : ordered) {
        for (const auto& [n, value] : ctx->memo_snapshot()) {
            out << ctx->modulus() << ' ' << n << ' ' << value.get_str() << '\n';
            ++rows;
        }
    }
    out.flush();
    if (!out)
        throw std::runtime_error("write to cache file '" + path + "' failed");
    return rows;
}

std::vector<CacheEntry> cache_import(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read cache file '" + path + "'");

    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("cache file '" + path + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != cache_header)
        throw std::runtime_error("cache file '" + path + "' has a bad header (expected \"" +
                                 std::string(cache_header) + "\")");

    std::vector<CacheEntry> entries;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::uint64_t m, n;
        std::string value_text, excess;
        if (!(fields >> m >> n >> value_text) || (fields >> excess))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected \"m n value\"");
        if (m < 2)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": modulus must be >= 2");
        CountValue value;
        try {
            value = CountValue(value_text);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad integer '" +
                                     value_text + "'");
        }
        if (value < 1)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": counts are positive");
        if (!seen.insert({m, n}).second)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate entry");
        entries.push_back({m, n, std::move(value)});
    }

    // Deterministic spot validation: every hundredth row plus the last one.
    std::map<std::uint64_t, ModulusContext> fresh;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i % 100 != 0 && i + 1 != entries.size()) continue;
        const CacheEntry& e = entries[i];
        ModulusContext& ctx = fresh.try_emplace(e.m, e.m).first->second;
        CountValue expect = ctx.sf_count(static_cast<long long>(e.n));
        if (expect != e.value)
            throw std::runtime_error(path + ": row " + std::to_string(i + 1) + " claims sf(" +
                                     std::to_string(e.n) + "," + std::to_string(e.m) + ") = " +
                                     e.value.get_str() + " but recomputation gives " +
                                     expect.get_str() + "; file rejected");
    }
    return entries;
}

} // namespace semifib
