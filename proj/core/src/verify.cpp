#include "semifib/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "semifib/bijection.hpp"
#include "semifib/series.hpp"

namespace semifib {

namespace {

const char* theorem_names[] = {
    "thm1_ob",        "thm2_parity", "thm3_equality",  "thm4_plateau",
    "cor5_value",     "cor6_specials", "thm6_sums",    "cong61",
    "cong62",         "thm7_even",   "lemma1_residue", "lemma2_closure",
    "maxm_characterization", "ident6",
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error(std::string(what) + " overflows 64 bits");
    return out;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const CountValue& v) { return v.get_str(); }

using Clock = std::chrono::steady_clock;

VerificationReport start_report(TheoremId id) {
    VerificationReport rep;
    rep.theorem = to_string(id);
    return rep;
}

VerificationReport finish(VerificationReport rep, Clock::time_point t0) {
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return rep;
}

} // namespace

std::string to_string(TheoremId id) {
    return theorem_names[static_cast<std::size_t>(id)];
}

TheoremId theorem_from_string(const std::string& name) {
    for (std::size_t i = 0; i < all_theorem_ids.size(); ++i)
        if (name == theorem_names[i]) return all_theorem_ids[i];
    throw std::invalid_argument("unknown theorem id '" + name + "'");
}

std::uint64_t TheoremParams::extra_or(const std::string& key, std::uint64_t fallback) const {
    auto it = extra.find(key);
    return it == extra.end() ? fallback : it->second;
}

Profile profile_from_string(const std::string& name) {
    if (name == "quick") return Profile::quick;
    if (name == "full") return Profile::full;
    throw std::invalid_argument("unknown profile '" + name + "' (expected quick or full)");
}

std::string to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

TheoremParams default_params(TheoremId id, Profile profile) {
    const bool full = profile == Profile::full;
    TheoremParams p;
    p.theorem_id = id;
    switch (id) {
    case TheoremId::thm1_ob:
        p.m_values = {2};
        p.n_max = full ? 5000 : 500;
        p.extra = {{"enum_n_max", full ? 60u : 40u}, {"enum_m_max", 4}};
        break;
    case TheoremId::thm2_parity:
        p.m_values = {2};
        p.n_max = full ? 500000 : 100000;
        break;
    case TheoremId::thm3_equality:
        p.m_values = {2, 3, 4, 5, 7};
        p.n_max = full ? 4000 : 2000;
        p.extra = {{"enum_n_max", full ? 70u : 60u}, {"enum_m_max", 4}};
        break;
    case TheoremId::thm4_plateau:
        p.m_values = {2, 3, 4, 5, 6};
        p.n_max = full ? 2000 : 1000;
        break;
    case TheoremId::cor5_value:
        p.m_values = {2, 3, 4, 5, 6};
        p.extra = {{"j_max", full ? 8u : 6u}};
        break;
    case TheoremId::cor6_specials:
        p.m_values = {2, 3, 4, 5, 6};
        p.extra = {{"i_max", 20}};
        break;
    case TheoremId::thm6_sums:
        p.m_values = {3};
        p.extra = {{"j_max", full ? 2000u : 500u}};
        break;
    case TheoremId::cong61:
        p.m_values = {3};
        p.extra = {{"j_max", full ? 2000u : 500u}};
        break;
    case TheoremId::cong62:
        p.m_values = {3};
        p.extra = {{"j_max", full ? 500u : 200u}, {"r_min", 2}, {"r_max", full ? 5u : 4u}};
        break;
    case TheoremId::thm7_even:
        p.m_values = {2, 3, 4, 5, 6};
        p.extra = {{"i_max", full ? 6u : 4u}};
        break;
    case TheoremId::lemma1_residue:
        p.m_values = {2, 3, 4};
        p.n_max = full ? 60 : 40;
        break;
    case TheoremId::lemma2_closure:
        p.m_values = full ? std::vector<std::uint64_t>{2, 3, 4, 5}
                          : std::vector<std::uint64_t>{2, 3, 4};
        p.n_max = full ? 50 : 40;
        break;
    case TheoremId::maxm_characterization:
        p.m_values = full ? std::vector<std::uint64_t>{2, 3, 4, 5}
                          : std::vector<std::uint64_t>{2, 3, 4};
        p.n_max = full ? 50 : 40;
        break;
    case TheoremId::ident6:
        p.m_values = {3};
        p.extra = {{"order", full ? 2187u : 729u}};
        break;
    }
    return p;
}

Verifier::Verifier(Budget budget, bool collect_all_failures)
    : budget_(budget), collect_all_(collect_all_failures) {}

ModulusContext& Verifier::context(std::uint64_t m) {
    return contexts_.try_emplace(m, m).first->second;
}

NdCounter& Verifier::counter(std::uint64_t m) {
    return counters_.try_emplace(m, m).first->second;
}

bool Verifier::note_failure(VerificationReport& report, Counterexample ce) {
    if (!report.first_counterexample) {
        report.first_counterexample = ce;
        report.passed = false;
    }
    if (collect_all_) {
        failures_.push_back(std::move(ce));
        return true;
    }
    return false;
}

void Verifier::ensure_sweep(std::uint64_t planned_cases) const {
    if (planned_cases > budget_.sweep_limit)
        throw BudgetError("verification sweep of " + std::to_string(planned_cases) +
                          " instances exceeds the limit of " +
                          std::to_string(budget_.sweep_limit));
}

VerificationReport Verifier::verify(const TheoremParams& params) {
    switch (params.theorem_id) {
    case TheoremId::thm1_ob:
    case TheoremId::thm3_equality:
        return check_count_equality(params);
    case TheoremId::thm2_parity:
        return check_parity(params);
    case TheoremId::thm4_plateau:
        return check_plateau(params);
    case TheoremId::cor5_value:
        return check_scaled_value(params);
    case TheoremId::cor6_specials:
        return check_specials(params);
    case TheoremId::thm6_sums:
        return check_partial_sums(params);
    case TheoremId::cong61:
        return check_cong61(params);
    case TheoremId::cong62:
        return check_cong62(params);
    case TheoremId::thm7_even:
        return check_even_family(params);
    case TheoremId::lemma1_residue:
        return check_residue_law(params);
    case TheoremId::lemma2_closure:
        return check_closure(params);
    case TheoremId::maxm_characterization:
        return check_characterization(params);
    case TheoremId::ident6:
        return check_digit_identity(params);
    }
    throw std::invalid_argument("unknown theorem id");
}

std::vector<VerificationReport> Verifier::verify_all(Profile profile) {
    std::vector<VerificationReport> reports;
    reports.reserve(all_theorem_ids.size());
    for (TheoremId id : all_theorem_ids)
        reports.push_back(verify(default_params(id, profile)));
    return reports;
}

/* Recurrence route vs multiplicity-DP route, with full set comparison (and
 * mapped-image equality) on the small prefix where enumeration is cheap. */
VerificationReport Verifier::check_count_equality(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    const std::uint64_t enum_n_max = params.extra_or("enum_n_max", 0);
    const std::uint64_t enum_m_max = params.extra_or("enum_m_max", 0);
    ensure_sweep((params.n_max + 1 + enum_n_max + 1) * params.m_values.size());

    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            ModulusContext& ctx = context(m);
            std::vector<CountValue> nd = counter(m).counts_upto(params.n_max);
            for (std::uint64_t n = 0; n <= params.n_max; ++n) {
                ++rep.cases_checked;
                CountValue sf = ctx.sf_count(static_cast<long long>(n));
                if (sf != nd[n] &&
                    !note_failure(rep, {{"m", str(m)},
                                        {"n", str(n)},
                                        {"observed", str(sf)},
                                        {"expected", str(nd[n])}}))
                    return false;
            }
            if (m > enum_m_max) continue;
            for (std::uint64_t n = 0; n <= enum_n_max; ++n) {
                ++rep.cases_checked;
                PartitionSet sf_set = enumerate_sf(ctx, n, budget_);
                PartitionSet nd_set = enumerate_nd(n, m, budget_);
                std::vector<Partition> mapped;
                mapped.reserve(sf_set.size());
                for (const Partition& p : sf_set.elements())
                    mapped.push_back(sf_to_nd(p, m, budget_));
                bool ok = CountValue(static_cast<unsigned long>(sf_set.size())) ==
                              ctx.sf_count(static_cast<long long>(n)) &&
                          sf_set.size() == nd_set.size() &&
                          PartitionSet::of_weight(n, std::move(mapped)) == nd_set;
                if (!ok && !note_failure(rep, {{"m", str(m)},
                                               {"n", str(n)},
                                               {"observed", str(static_cast<std::uint64_t>(
                                                                sf_set.size()))},
                                               {"expected", str(static_cast<std::uint64_t>(
                                                                nd_set.size()))},
                                               {"detail", "enumerated sets disagree"}}))
                    return false;
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

/* Parity of the m=2 counts follows n mod 3: even exactly at multiples of 3.
 * The count at 0 is 1 (the empty partition), so the sweep starts at 1. */
VerificationReport Verifier::check_parity(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    rep.note = "checked for n >= 1";
    ensure_sweep(params.n_max + 1);
    ModulusContext& ctx = context(2);
    auto sweep = [&]() -> bool {
        for (std::uint64_t n = 1; n <= params.n_max; ++n) {
            ++rep.cases_checked;
            CountValue sf = ctx.sf_count(static_cast<long long>(n));
            const bool want_even = n % 3 == 0;
            if (is_even(sf) != want_even &&
                !note_failure(rep, {{"n", str(n)},
                                    {"observed", str(sf)},
                                    {"expected", want_even ? "even" : "odd"}}))
                return false;
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

/* The m-1 counts strictly between consecutive multiples of m agree and equal
 * the running prefix sum of all counts up to the multiple's index. */
VerificationReport Verifier::check_plateau(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    ensure_sweep((params.n_max + 1) * params.m_values.size());
    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            ModulusContext& ctx = context(m);
            CountValue prefix = 0;
            for (std::uint64_t n = 0; n <= params.n_max; ++n) {
                ++rep.cases_checked;
                prefix += ctx.sf_count(static_cast<long long>(n));
                for (std::uint64_t r = 1; r < m; ++r) {
                    CountValue v = ctx.sf_count(static_cast<long long>(n * m + r));
                    if (v != prefix &&
                        !note_failure(rep, {{"m", str(m)},
                                            {"n", str(n)},
                                            {"r", str(r)},
                                            {"observed", str(v)},
                                            {"expected", str(prefix)}}))
                        return false;
                }
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

// Counts at m^j*(m*v+r) depend only on v: the value is v+1.
VerificationReport Verifier::check_scaled_value(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    const std::uint64_t j_max = params.extra_or("j_max", 6);
    {
        std::uint64_t planned = 0;
        for (std::uint64_t m : params.m_values)
            planned += (j_max + 1) * (m + 1) * (m - 1);
        ensure_sweep(planned);
    }
    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            ModulusContext& ctx = context(m);
            std::uint64_t power = 1;
            for (std::uint64_t j = 0; j <= j_max; ++j) {
                for (std::uint64_t v = 0; v <= m; ++v) {
                    for (std::uint64_t r = 1; r < m; ++r) {
                        ++rep.cases_checked;
                        const std::uint64_t n = checked_mul(power, m * v + r, "argument");
                        CountValue sf = ctx.sf_count(static_cast<long long>(n));
                        if (sf != v + 1 &&
                            !note_failure(rep, {{"m", str(m)},
                                                {"j", str(j)},
                                                {"v", str(v)},
                                                {"r", str(r)},
                                                {"n", str(n)},
                                                {"observed", str(sf)},
                                                {"expected", str(v + 1)}}))
                            return false;
                    }
                }
                if (j < j_max) power = checked_mul(power, m, "power");
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

/* Three special-value families: count 1 at pure powers, count 1 at small
 * multiples of pure powers, and the v+1 plateau values at scale 1.  The last
 * clause is stated with an unbound variable in the source text; it is checked
 * in the j=0 form of the scaled-value law. */
VerificationReport Verifier::check_specials(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    rep.note = "statement normalized";
    const std::uint64_t i_max = params.extra_or("i_max", 20);
    {
        std::uint64_t planned = 0;
        for (std::uint64_t m : params.m_values)
            planned += (i_max + 1) * m + (m + 1) * (m - 1);
        ensure_sweep(planned);
    }
    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            ModulusContext& ctx = context(m);
            std::uint64_t power = 1;
            for (std::uint64_t i = 0; i <= i_max; ++i) {
                ++rep.cases_checked;
                CountValue at_power = ctx.sf_count(static_cast<long long>(power));
                if (at_power != 1 &&
                    !note_failure(rep, {{"m", str(m)},
                                        {"i", str(i)},
                                        {"n", str(power)},
                                        {"observed", str(at_power)},
                                        {"expected", "1"}}))
                    return false;
                for (std::uint64_t h = 1; h <= m - 1; ++h) {
                    ++rep.cases_checked;
                    const std::uint64_t n = checked_mul(power, h, "argument");
                    CountValue sf = ctx.sf_count(static_cast<long long>(n));
                    if (sf != 1 &&
                        !note_failure(rep, {{"m", str(m)},
                                            {"i", str(i)},
                                            {"h", str(h)},
                                            {"n", str(n)},
                                            {"observed", str(sf)},
                                            {"expected", "1"}}))
                        return false;
                }
                if (i < i_max) power = checked_mul(power, m, "power");
            }
            for (std::uint64_t v = 0; v <= m; ++v) {
                for (std::uint64_t r = 1; r < m; ++r) {
                    ++rep.cases_checked;
                    CountValue sf = ctx.sf_count(static_cast<long long>(m * v + r));
                    if (sf != v + 1 &&
                        !note_failure(rep, {{"m", str(m)},
                                            {"v", str(v)},
                                            {"r", str(r)},
                                            {"observed", str(sf)},
                                            {"expected", str(v + 1)}}))
                        return false;
                }
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

// Partial sums of the m=3 counts over 0..2j+1 are even for every j.
VerificationReport Verifier::check_partial_sums(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    const std::uint64_t j_max = params.extra_or("j_max", 500);
    ensure_sweep(j_max + 1);
    ModulusContext& ctx = context(3);
    auto sweep = [&]() -> bool {
        CountValue sum = ctx.sf_count(0) + ctx.sf_count(1);
        for (std::uint64_t j = 0; j <= j_max; ++j) {
            ++rep.cases_checked;
            if (!is_even(sum) &&
                !note_failure(rep, {{"j", str(j)},
                                    {"observed", str(sum)},
                                    {"expected", "even"}}))
                return false;
            sum += ctx.sf_count(static_cast<long long>(2 * j + 2));
            sum += ctx.sf_count(static_cast<long long>(2 * j + 3));
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

// For even j the plateau pair at 3j+4, 3j+5 is even (and equal).
VerificationReport Verifier::check_cong61(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    const std::uint64_t j_max = params.extra_or("j_max", 500);
    ensure_sweep(j_max / 2 + 1);
    ModulusContext& ctx = context(3);
    auto sweep = [&]() -> bool {
        for (std::uint64_t j = 0; j <= j_max; j += 2) {
            ++rep.cases_checked;
            CountValue a = ctx.sf_count(static_cast<long long>(3 * j + 4));
            CountValue b = ctx.sf_count(static_cast<long long>(3 * j + 5));
            if ((a != b || !is_even(a)) &&
                !note_failure(rep, {{"j", str(j)},
                                    {"observed", str(a) + "," + str(b)},
                                    {"expected", "equal and even"}}))
                return false;
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

// Same congruence family with the scale 3^r, r >= 2, now for every j.
VerificationReport Verifier::check_cong62(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    const std::uint64_t j_max = params.extra_or("j_max", 200);
    const std::uint64_t r_min = params.extra_or("r_min", 2);
    const std::uint64_t r_max = params.extra_or("r_max", 4);
    if (r_min < 2 || r_max < r_min)
        throw std::invalid_argument("cong62 needs 2 <= r_min <= r_max");
    ensure_sweep((r_max - r_min + 1) * (j_max + 1));
    ModulusContext& ctx = context(3);
    auto sweep = [&]() -> bool {
        for (std::uint64_t r = r_min; r <= r_max; ++r) {
            std::uint64_t scale = 1;
            for (std::uint64_t i = 0; i < r; ++i) scale = checked_mul(scale, 3, "scale");
            for (std::uint64_t j = 0; j <= j_max; ++j) {
                ++rep.cases_checked;
                const std::uint64_t base = checked_mul(scale, j, "argument");
                CountValue a = ctx.sf_count(static_cast<long long>(base + 4));
                CountValue b = ctx.sf_count(static_cast<long long>(base + 5));
                if ((a != b || !is_even(a)) &&
                    !note_failure(rep, {{"r", str(r)},
                                        {"j", str(j)},
                                        {"observed", str(a) + "," + str(b)},
                                        {"expected", "equal and even"}}))
                    return false;
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

/* Scaled arguments m^i*k with k = m(2t+1)+r give the even value 2t+2; the
 * admissibility bound k <= m^2+r is exactly 2t+1 <= m. */
VerificationReport Verifier::check_even_family(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    const std::uint64_t i_max = params.extra_or("i_max", 4);
    {
        std::uint64_t planned = 0;
        for (std::uint64_t m : params.m_values)
            planned += (i_max + 1) * (m - 1) * ((m - 1) / 2 + 1);
        ensure_sweep(planned);
    }
    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            ModulusContext& ctx = context(m);
            std::uint64_t power = 1;
            for (std::uint64_t i = 0; i <= i_max; ++i) {
                for (std::uint64_t t = 0; 2 * t + 1 <= m; ++t) {
                    for (std::uint64_t r = 1; r < m; ++r) {
                        ++rep.cases_checked;
                        const std::uint64_t k = m * (2 * t + 1) + r;
                        const std::uint64_t n = checked_mul(power, k, "argument");
                        CountValue sf = ctx.sf_count(static_cast<long long>(n));
                        if ((!is_even(sf) || sf != 2 * t + 2) &&
                            !note_failure(rep, {{"m", str(m)},
                                                {"i", str(i)},
                                                {"t", str(t)},
                                                {"r", str(r)},
                                                {"k", str(k)},
                                                {"n", str(n)},
                                                {"observed", str(sf)},
                                                {"expected", str(2 * t + 2)}}))
                            return false;
                    }
                }
                if (i < i_max) power = checked_mul(power, m, "power");
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

/* In every enumerated family member, parts other than one distinguished
 * residue part are multiples of m: exactly one part congruent to n mod m
 * when that residue is nonzero, none otherwise. */
VerificationReport Verifier::check_residue_law(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    ensure_sweep((params.n_max + 1) * params.m_values.size());
    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            ModulusContext& ctx = context(m);
            for (std::uint64_t n = 0; n <= params.n_max; ++n) {
                const std::uint64_t r = n % m;
                PartitionSet set = enumerate_sf(ctx, n, budget_);
                for (const Partition& p : set.elements()) {
                    ++rep.cases_checked;
                    std::uint64_t residue_parts = 0, other_nonmultiples = 0;
                    for (std::uint64_t part : p.parts()) {
                        const std::uint64_t pr = part % m;
                        if (pr == r && pr != 0)
                            ++residue_parts;
                        else if (pr != 0)
                            ++other_nonmultiples;
                    }
                    const bool ok =
                        other_nonmultiples == 0 && residue_parts == (r == 0 ? 0 : 1);
                    if (!ok && !note_failure(rep, {{"m", str(m)},
                                                   {"n", str(n)},
                                                   {"partition", p.to_text()},
                                                   {"observed",
                                                    str(residue_parts) + " residue parts, " +
                                                        str(other_nonmultiples) +
                                                        " other non-multiples"},
                                                   {"expected",
                                                    r == 0 ? "all parts multiples"
                                                           : "exactly one residue part"}}))
                        return false;
                }
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

/* Every applicable reduction keeps membership in the characterized family
 * and is undone exactly by its inverse. */
VerificationReport Verifier::check_closure(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    ensure_sweep((params.n_max + 1) * params.m_values.size());
    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            for (std::uint64_t n = 0; n <= params.n_max; ++n) {
                PartitionSet set = b_set(n, m, budget_);
                for (const Partition& p : set.elements()) {
                    auto report_bad = [&](const char* op, const std::string& detail) {
                        return note_failure(rep, {{"m", str(m)},
                                                  {"n", str(n)},
                                                  {"partition", p.to_text()},
                                                  {"operation", op},
                                                  {"observed", detail}});
                    };
                    if (tau1_applicable(p, m)) {
                        ++rep.cases_checked;
                        Tau1Result res = tau1(p, m);
                        if (!is_semi_m_fib(res.image, m)) {
                            if (!report_bad("tau1", res.image.to_text() + " left the family"))
                                return false;
                        } else if (tau1_inverse(res.image, res.removed_part) != p) {
                            if (!report_bad("tau1", "inverse failed to restore the source"))
                                return false;
                        }
                    }
                    for (std::size_t t = 0; t < p.size(); ++t) {
                        if (!tau2_applicable(p, m, t)) continue;
                        ++rep.cases_checked;
                        Tau2Result res = tau2(p, m, t);
                        if (!is_semi_m_fib(res.image, m)) {
                            if (!report_bad("tau2", res.image.to_text() + " left the family"))
                                return false;
                        } else if (tau2_inverse(res.image, m, res.reduced_index) != p) {
                            if (!report_bad("tau2", "inverse failed to restore the source"))
                                return false;
                        }
                    }
                    if (tau3_applicable(p, m)) {
                        ++rep.cases_checked;
                        Tau3Result res = tau3(p, m);
                        if (!is_semi_m_fib(res.image, m)) {
                            if (!report_bad("tau3", res.image.to_text() + " left the family"))
                                return false;
                        } else if (tau3_inverse(res.image, m) != p) {
                            if (!report_bad("tau3", "inverse failed to restore the source"))
                                return false;
                        }
                    }
                }
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

// Recursive construction and max-power filter produce identical sets.
VerificationReport Verifier::check_characterization(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    ensure_sweep((params.n_max + 1) * params.m_values.size());
    auto sweep = [&]() -> bool {
        for (std::uint64_t m : params.m_values) {
            ModulusContext& ctx = context(m);
            for (std::uint64_t n = 0; n <= params.n_max; ++n) {
                ++rep.cases_checked;
                PartitionSet constructed = enumerate_sf(ctx, n, budget_);
                PartitionSet filtered = b_set(n, m, budget_);
                if (constructed == filtered) continue;
                std::string detail = "sizes " + str(static_cast<std::uint64_t>(
                                                    constructed.size())) +
                                     " vs " + str(static_cast<std::uint64_t>(filtered.size()));
                for (const Partition& p : constructed.elements())
                    if (!filtered.contains(p)) {
                        detail = "constructed-only element " + p.to_text();
                        break;
                    }
                for (const Partition& p : filtered.elements())
                    if (!constructed.contains(p)) {
                        detail = "filter-only element " + p.to_text();
                        break;
                    }
                if (!note_failure(rep, {{"m", str(m)}, {"n", str(n)}, {"observed", detail}}))
                    return false;
            }
        }
        return true;
    };
    sweep();
    return finish(std::move(rep), t0);
}

// Delegates to the series product check of the base-3 digit identity.
VerificationReport Verifier::check_digit_identity(const TheoremParams& params) {
    auto t0 = Clock::now();
    VerificationReport rep = start_report(params.theorem_id);
    const std::uint64_t order = params.extra_or("order", 729);
    ensure_sweep(order + 1);
    rep.cases_checked = order + 1;
    if (!verify_ident6(order))
        note_failure(rep, {{"order", str(order)},
                           {"observed", "a coefficient differs from 1"},
                           {"expected", "all coefficients 1"}});
    return finish(std::move(rep), t0);
}

} // namespace semifib
