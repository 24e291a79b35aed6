#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "semifib/bfile.hpp"
#include "semifib/count_cache.hpp"

using namespace semifib;

namespace {

// sf(0..11) at modulus 2; the b-file fixtures below are shifts of this list.
const char* straight_text =
    "0 1\n1 1\n2 1\n3 2\n4 1\n5 3\n6 2\n7 5\n8 1\n9 6\n";

std::string thrown_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

std::filesystem::path temp_file(const char* name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::trunc);
    out << text;
}

} // namespace

TEST_CASE("b-file parsing tolerates comments, blanks, and CRLF") {
    BFile bf = BFile::parse_text("# header comment\r\n"
                                 "\r\n"
                                 "   \t\n"
                                 "  # indented comment\n"
                                 "0 1\r\n"
                                 "1 1\n"
                                 "3 2\n");
    REQUIRE(bf.entries.size() == 3);
    CHECK(bf.entries[0] == std::pair<long long, CountValue>(0, 1));
    CHECK(bf.entries[1] == std::pair<long long, CountValue>(1, 1));
    CHECK(bf.entries[2] == std::pair<long long, CountValue>(3, 2));
    CHECK(bf.source_path == "<memory>");
}

TEST_CASE("b-file parsing rejects malformed lines with positions") {
    auto msg = [](const std::string& text) {
        return thrown_message([&] { BFile::parse_text(text, "f.txt"); });
    };
    CHECK(msg("0\n").find("f.txt:1") != std::string::npos);
    CHECK(msg("0 1 2\n").find("expected \"index value\"") != std::string::npos);
    CHECK(msg("zero 1\n").find("expected \"index value\"") != std::string::npos);
    CHECK(msg("0 abc\n").find("bad integer 'abc'") != std::string::npos);
    CHECK(msg("0 1\nbroken\n").find("f.txt:2") != std::string::npos);
    CHECK(msg("0 1\n0 2\n").find("strictly increasing") != std::string::npos);
    CHECK(msg("5 3\n4 1\n").find("strictly increasing") != std::string::npos);
    CHECK_THROWS_AS(BFile::parse_file("/no/such/dir/missing.txt"), std::runtime_error);
}

TEST_CASE("reference check aligns and passes at offset zero") {
    BFile bf = BFile::parse_text(straight_text);
    auto rep = oeis_check(bf, 2, offset_auto, 0);
    CHECK(rep.passed);
    CHECK(rep.theorem == "oeis");
    CHECK(rep.cases_checked == 10);
    CHECK(rep.note == "offset 0 (auto-detected)");

    auto given = oeis_check(bf, 2, 0, 0);
    CHECK(given.passed);
    CHECK(given.note == "offset 0 (given)");
}

TEST_CASE("reference check detects shifted index conventions") {
    // Index i carries the count at i-1 (one-based file).
    BFile minus = BFile::parse_text(
        "1 1\n2 1\n3 1\n4 2\n5 1\n6 3\n7 2\n8 5\n9 1\n10 6\n");
    auto rep_minus = oeis_check(minus, 2, offset_auto, 0);
    CHECK(rep_minus.passed);
    CHECK(rep_minus.note == "offset -1 (auto-detected)");

    // Index i carries the count at i+1.
    BFile plus = BFile::parse_text(
        "0 1\n1 1\n2 2\n3 1\n4 3\n5 2\n6 5\n7 1\n8 6\n9 3\n");
    auto rep_plus = oeis_check(plus, 2, offset_auto, 0);
    CHECK(rep_plus.passed);
    CHECK(rep_plus.note == "offset 1 (auto-detected)");

    BFile hopeless = BFile::parse_text("0 5\n1 5\n2 5\n");
    CHECK(thrown_message([&] { oeis_check(hopeless, 2, offset_auto, 0); })
              .find("no offset in {0,-1,+1}") != std::string::npos);

    BFile empty = BFile::parse_text("# nothing but commentary\n");
    CHECK(thrown_message([&] { oeis_check(empty, 2, offset_auto, 0); })
              .find("no data lines") != std::string::npos);
}

TEST_CASE("reference check reports the first divergence") {
    // Correct through index 10; index 11 should be 9.
    BFile bf = BFile::parse_text(
        "0 1\n1 1\n2 1\n3 2\n4 1\n5 3\n6 2\n7 5\n8 1\n9 6\n10 3\n11 8\n");
    auto rep = oeis_check(bf, 2, offset_auto, 0);
    CHECK_FALSE(rep.passed);
    CHECK(rep.cases_checked == 12);
    REQUIRE(rep.first_counterexample.has_value());
    CHECK(rep.first_counterexample->at("index") == "11");
    CHECK(rep.first_counterexample->at("n") == "11");
    CHECK(rep.first_counterexample->at("observed") == "9");
    CHECK(rep.first_counterexample->at("expected") == "8");
}

TEST_CASE("reference check honors the index cap") {
    BFile bf = BFile::parse_text(straight_text);
    auto rep = oeis_check(bf, 2, 0, 5);
    CHECK(rep.passed);
    CHECK(rep.cases_checked == 6);

    BFile single = BFile::parse_text("9 6\n");
    auto one = oeis_check(single, 2, offset_auto, 0);
    CHECK(one.passed);
    CHECK(one.cases_checked == 1);
    CHECK(one.note == "offset 0 (auto-detected)");
}

TEST_CASE("cache export and import round trip") {
    ModulusContext two(2), three(3);
    two.sf_count(100);
    three.sf_count(81);
    const std::size_t total = two.memo_size() + three.memo_size();

    auto path = temp_file("semifib_test_cache.txt");
    // Unsorted input order; the file is still ordered by modulus then n.
    std::size_t rows = cache_export({&three, &two}, path.string());
    CHECK(rows == total);

    std::string text = slurp(path);
    REQUIRE(text.rfind("semifib-cache v1\n", 0) == 0);

    auto entries = cache_import(path.string());
    REQUIRE(entries.size() == total);
    for (std::size_t i = 1; i < entries.size(); ++i) {
        auto key = std::pair(entries[i - 1].m, entries[i - 1].n);
        auto next = std::pair(entries[i].m, entries[i].n);
        CHECK(key < next);
    }

    // Preloading a fresh context from the imported rows reproduces the counts.
    ModulusContext fresh(2);
    for (const auto& e : entries)
        if (e.m == 2) fresh.preload(e.n, e.value);
    CHECK(fresh.sf_count(100) == two.sf_count(100));
    CHECK(fresh.memo_size() == two.memo_size());

    std::filesystem::remove(path);
}

TEST_CASE("cache import rejects structural damage") {
    auto path = temp_file("semifib_test_cache_bad.txt");
    auto reject = [&](const std::string& text) {
        spit(path, text);
        return thrown_message([&] { cache_import(path.string()); });
    };

    CHECK(reject("").find("is empty") != std::string::npos);
    CHECK(reject("some other header\n2 0 1\n").find("bad header") != std::string::npos);
    CHECK(reject("semifib-cache v1\n2 0\n").find("expected \"m n value\"") !=
          std::string::npos);
    CHECK(reject("semifib-cache v1\n2 0 1 7\n").find("expected \"m n value\"") !=
          std::string::npos);
    CHECK(reject("semifib-cache v1\n1 0 1\n").find("modulus must be >= 2") !=
          std::string::npos);
    CHECK(reject("semifib-cache v1\n2 0 x\n").find("bad integer 'x'") != std::string::npos);
    CHECK(reject("semifib-cache v1\n2 0 0\n").find("counts are positive") !=
          std::string::npos);
    CHECK(reject("semifib-cache v1\n2 0 1\n2 0 1\n").find("duplicate entry") !=
          std::string::npos);

    std::filesystem::remove(path);
}

TEST_CASE("cache import recomputes sampled rows and rejects lies") {
    ModulusContext two(2);
    two.sf_count(400);
    auto path = temp_file("semifib_test_cache_tamper.txt");
    cache_export({&two}, path.string());

    // The first data row is always in the validation sample.
    std::string text = slurp(path);
    std::size_t line2 = text.find('\n') + 1;
    std::size_t line2_end = text.find('\n', line2);
    std::string original_row = text.substr(line2, line2_end - line2);
    std::istringstream fields(original_row);
    std::uint64_t m = 0, n = 0;
    std::string value;
    fields >> m >> n >> value;
    std::string tampered = text.substr(0, line2) + std::to_string(m) + " " +
                           std::to_string(n) + " 424242\n" + text.substr(line2_end + 1);
    spit(path, tampered);

    std::string msg = thrown_message([&] { cache_import(path.string()); });
    CHECK(msg.find("row 1 claims") != std::string::npos);
    CHECK(msg.find("424242") != std::string::npos);
    CHECK(msg.find("file rejected") != std::string::npos);

    // Same story for the always-sampled final row: keep its key, lie about
    // the value (appending a digit guarantees a different number).
    std::size_t last_nl = text.rfind('\n', text.size() - 2);
    std::string last_row = text.substr(last_nl + 1);
    last_row.insert(last_row.size() - 1, "1");
    spit(path, text.substr(0, last_nl + 1) + last_row);
    msg = thrown_message([&] { cache_import(path.string()); });
    CHECK(msg.find("file rejected") != std::string::npos);

    std::filesystem::remove(path);
}
