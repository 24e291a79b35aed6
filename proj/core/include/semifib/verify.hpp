#ifndef SEMIFIB_VERIFY_HPP
#define SEMIFIB_VERIFY_HPP

/* Sweep-based checking of the count identities, congruences, and structural
 * set equalities, with first-counterexample capture and structured reports. */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semifib/budget.hpp"
#include "semifib/power_partitions.hpp"
#include "semifib/semifib.hpp"

namespace semifib {

enum class TheoremId {
    thm1_ob,
    thm2_parity,
    thm3_equality,
    thm4_plateau,
    cor5_value,
    cor6_specials,
    thm6_sums,
    cong61,
    cong62,
    thm7_even,
    lemma1_residue,
    lemma2_closure,
    maxm_characterization,
    ident6,
};

inline constexpr std::array<TheoremId, 14> all_theorem_ids = {
    TheoremId::thm1_ob,        TheoremId::thm2_parity,
    TheoremId::thm3_equality,  TheoremId::thm4_plateau,
    TheoremId::cor5_value,     TheoremId::cor6_specials,
    TheoremId::thm6_sums,      TheoremId::cong61,
    TheoremId::cong62,         TheoremId::thm7_even,
    TheoremId::lemma1_residue, TheoremId::lemma2_closure,
    TheoremId::maxm_characterization, TheoremId::ident6,
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);

struct TheoremParams {
    TheoremId theorem_id;
    std::vector<std::uint64_t> m_values;
    std::uint64_t n_max = 0;
    std::map<std::string, std::uint64_t> extra;  // j_max, r_max, v_max, i_max, ...

    std::uint64_t extra_or(const std::string& key, std::uint64_t fallback) const;
};

// Quantifier values plus observed/expected, keyed by name; string-valued so
// arbitrary-precision observations survive unchanged.
using Counterexample = std::map<std::string, std::string>;

struct VerificationReport {
    std::string theorem;
    bool passed = true;
    std::uint64_t cases_checked = 0;
    std::optional<Counterexample> first_counterexample;
    std::int64_t elapsed_ms = 0;
    std::string note;  // empty unless the check deviates from the headline statement
};

enum class Profile { quick, full };

Profile profile_from_string(const std::string& name);
std::string to_string(Profile p);

// Range presets per theorem; quick targets seconds, full minutes.
TheoremParams default_params(TheoremId id, Profile profile);

class Verifier {
public:
    explicit Verifier(Budget budget = {}, bool collect_all_failures = false);

    VerificationReport verify(const TheoremParams& params);
    std::vector<VerificationReport> verify_all(Profile profile);

    // Populated only when constructed with collect_all_failures.
    const std::vector<Counterexample>& failures() const { return failures_; }

    ModulusContext& context(std::uint64_t m);
    NdCounter& counter(std::uint64_t m);

private:
    // Returns true when the sweep should continue (exhaustive mode).
    bool note_failure(VerificationReport& report, Counterexample ce);
    void ensure_sweep(std::uint64_t planned_cases) const;

    VerificationReport check_count_equality(const TheoremParams& params);
    VerificationReport check_parity(const TheoremParams& params);
    VerificationReport check_plateau(const TheoremParams& params);
    VerificationReport check_scaled_value(const TheoremParams& params);
    VerificationReport check_specials(const TheoremParams& params);
    VerificationReport check_partial_sums(const TheoremParams& params);
    VerificationReport check_cong61(const TheoremParams& params);
    VerificationReport check_cong62(const TheoremParams& params);
    VerificationReport check_even_family(const TheoremParams& params);
    VerificationReport check_residue_law(const TheoremParams& params);
    VerificationReport check_closure(const TheoremParams& params);
    VerificationReport check_characterization(const TheoremParams& params);
    VerificationReport check_digit_identity(const TheoremParams& params);

    Budget budget_;
    bool collect_all_;
    std::map<std::uint64_t, ModulusContext> contexts_;
    std::map<std::uint64_t, NdCounter> counters_;
    std::vector<Counterexample> failures_;
};

} // namespace semifib

#endif
