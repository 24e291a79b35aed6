#include "semifib/bfile.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace semifib {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

BFile BFile::parse_text(const std::string& text, std::string source_path) {
    BFile out;
    out.source_path = std::move(source_path);
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        const std::size_t first = line.find_first_not_of(" \t");
        if (line[first] == '#') continue;

        std::istringstream fields(line);
        long long index;
        std::string value_text, excess;
        if (!(fields >> index >> value_text) || (fields >> excess))
            throw std::runtime_error(out.source_path + ":" + std::to_string(lineno) +
                                     ": expected \"index value\"");
        CountValue value;
        try {
            value = CountValue(value_text);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error(out.source_path + ":" + std::to_string(lineno) +
                                     ": bad integer '" + value_text + "'");
        }
        if (!out.entries.empty() && index <= out.entries.back().first)
            throw std::runtime_error(out.source_path + ":" + std::to_string(lineno) +
                                     ": indices must be strictly increasing");
        out.entries.emplace_back(index, std::move(value));
    }
    return out;
}

BFile BFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read b-file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

VerificationReport oeis_check(const BFile& bfile, std::uint64_t m, long long offset,
                              std::uint64_t max_n) {
    const auto t0 = std::chrono::steady_clock::now();
    if (bfile.entries.empty())
        throw std::runtime_error("b-file '" + bfile.source_path + "' has no data lines");

    ModulusContext ctx(m);
    long long shift = offset;
    if (offset == offset_auto) {
        bool found = false;
        const std::size_t probe = std::min<std::size_t>(10, bfile.entries.size());
        for (long long candidate : {0LL, -1LL, 1LL}) {
            bool all = true;
            for (std::size_t i = 0; i < probe && all; ++i) {
                const auto& [index, value] = bfile.entries[i];
                all = ctx.sf_count(index + candidate) == value;
            }
            if (all) {
                shift = candidate;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error("no offset in {0,-1,+1} aligns '" + bfile.source_path +
                                     "' with the computed sequence");
    }

    VerificationReport rep;
    rep.theorem = "oeis";
    rep.note = "offset " + std::to_string(shift) +
               (offset == offset_auto ? " (auto-detected)" : " (given)");
    for (const auto& [index, value] : bfile.entries) {
        const long long n = index + shift;
        if (max_n != 0 && (n < 0 || static_cast<std::uint64_t>(n) > max_n)) continue;
        ++rep.cases_checked;
        CountValue computed = ctx.sf_count(n);
        if (computed != value) {
            rep.passed = false;
            rep.first_counterexample = Counterexample{{"index", std::to_string(index)},
                                                      {"n", std::to_string(n)},
                                                      {"observed", computed.get_str()},
                                                      {"expected", value.get_str()}};
            break;
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace semifib
