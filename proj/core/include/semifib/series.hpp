#ifndef SEMIFIB_SERIES_HPP
#define SEMIFIB_SERIES_HPP

/* Truncated formal power series over arbitrary-precision integers, plus the
 * generating-function product whose coefficients are the semi-m-Fibonacci
 * counts and its prefix-sum companion. */

#include <cstdint>
#include <vector>

#include "semifib/count.hpp"

namespace semifib {

class PowerSeries {
public:
    // Zero series of the given truncation degree.
    explicit PowerSeries(std::uint64_t order) : coeffs_(order + 1) {}

    static PowerSeries constant(CountValue value, std::uint64_t order);
    static PowerSeries monomial(const CountValue& value, std::uint64_t exponent,
                                std::uint64_t order);
    static PowerSeries from_coefficients(std::vector<CountValue> coeffs);

    std::uint64_t order() const { return coeffs_.size() - 1; }
    const CountValue& coefficient(std::uint64_t k) const { return coeffs_.at(k); }
    const std::vector<CountValue>& coefficients() const { return coeffs_; }

    void set_coefficient(std::uint64_t k, CountValue value);

    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<CountValue> coeffs_;  // index 0..order
};

// Sum/difference/product truncated to the smaller order of the operands.
PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_subtract(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_scalar(const PowerSeries& a, const CountValue& c);

// 1/(1-q^k): coefficient 1 exactly at multiples of k.
PowerSeries geometric_inverse(std::uint64_t k, std::uint64_t order);

// Substitution q -> q^d by index dilation: coefficient k moves to k*d.
PowerSeries series_dilate(const PowerSeries& a, std::uint64_t d, std::uint64_t order);

/* Product over levels i with m^i <= order of
 *   1 + sum over h >= 1 with h not divisible by m of q^(h * m^i);
 * the coefficient of q^k is the semi-m-Fibonacci count of k. */
PowerSeries series_G(std::uint64_t m, std::uint64_t order);

// G divided by (1-q): running prefix sums of the counts.
PowerSeries series_J(std::uint64_t m, std::uint64_t order);

/* Expands the product over levels of (1 + q^(3^i) + q^(2*3^i)) and checks
 * that every coefficient through the given order equals 1, i.e. that the
 * product telescopes to 1/(1-q) via base-3 digits. */
bool verify_ident6(std::uint64_t order);

} // namespace semifib

#endif
