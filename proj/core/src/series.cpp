#include "semifib/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace semifib {

PowerSeries PowerSeries::constant(CountValue value, std::uint64_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = std::move(value);
    return s;
}

PowerSeries PowerSeries::monomial(const CountValue& value, std::uint64_t exponent,
                                  std::uint64_t order) {
    PowerSeries s(order);
    if (exponent <= order) s.coeffs_[exponent] = value;
    return s;
}

PowerSeries PowerSeries::from_coefficients(std::vector<CountValue> coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("a power series needs at least the constant coefficient");
    PowerSeries s(coeffs.size() - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
}

void PowerSeries::set_coefficient(std::uint64_t k, CountValue value) {
    coeffs_.at(k) = std::move(value);
}

namespace {

std::uint64_t common_order(const PowerSeries& a, const PowerSeries& b) {
    return std::min(a.order(), b.order());
}

} // namespace

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(common_order(a, b));
    for (std::uint64_t k = 0; k <= out.order(); ++k)
        out.set_coefficient(k, a.coefficient(k) + b.coefficient(k));
    return out;
}

PowerSeries series_subtract(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(common_order(a, b));
    for (std::uint64_t k = 0; k <= out.order(); ++k)
        out.set_coefficient(k, a.coefficient(k) - b.coefficient(k));
    return out;
}

PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b) {
    const std::uint64_t order = common_order(a, b);
    // Convolve over the sparser operand's nonzero support.
    const auto nonzeros = [order](const PowerSeries& s) {
        std::vector<std::uint64_t> idx;
        for (std::uint64_t k = 0; k <= order; ++k)
            if (s.coefficient(k) != 0) idx.push_back(k);
        return idx;
    };
    std::vector<std::uint64_t> sa = nonzeros(a);
    std::vector<std::uint64_t> sb = nonzeros(b);
    const PowerSeries& dense = sa.size() >= sb.size() ? a : b;
    const std::vector<std::uint64_t>& sparse_idx = sa.size() >= sb.size() ? sb : sa;
    const PowerSeries& sparse = sa.size() >= sb.size() ? b : a;

    std::vector<CountValue> acc(order + 1);
    for (std::uint64_t j : sparse_idx) {
        const CountValue& cj = sparse.coefficient(j);
        for (std::uint64_t i = 0; i + j <= order; ++i) {
            const CountValue& ci = dense.coefficient(i);
            if (ci == 0) continue;
            acc[i + j] += ci * cj;
        }
    }
    return PowerSeries::from_coefficients(std::move(acc));
}

PowerSeries series_scalar(const PowerSeries& a, const CountValue& c) {
    PowerSeries out(a.order());
    for (std::uint64_t k = 0; k <= a.order(); ++k)
        out.set_coefficient(k, a.coefficient(k) * c);
    return out;
}

PowerSeries geometric_inverse(std::uint64_t k, std::uint64_t order) {
    if (k < 1)
        throw std::invalid_argument("geometric_inverse needs k >= 1");
    PowerSeries s(order);
    for (std::uint64_t j = 0; j <= order; j += k) {
        s.set_coefficient(j, 1);
        if (j > order - k) break;  // unsigned wrap guard
    }
    return s;
}

PowerSeries series_dilate(const PowerSeries& a, std::uint64_t d, std::uint64_t order) {
    if (d < 1)
        throw std::invalid_argument("series_dilate needs d >= 1");
    PowerSeries out(order);
    for (std::uint64_t k = 0; k <= a.order() && k <= order / d; ++k)
        out.set_coefficient(k * d, a.coefficient(k));
    return out;
}

PowerSeries series_G(std::uint64_t m, std::uint64_t order) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2");
    PowerSeries acc = PowerSeries::constant(1, order);
    // Factors whose lowest nonconstant exponent m^i exceeds the order are
    // identically 1 after truncation, so the product below is complete.
    for (std::uint64_t power = 1; power <= order; ) {
        PowerSeries factor = PowerSeries::constant(1, order);
        for (std::uint64_t h = 1; h <= order / power; ++h) {
            if (h % m == 0) continue;
            factor.set_coefficient(h * power, 1);
        }
        acc = series_multiply(acc, factor);
        if (power > order / m) break;
        power *= m;
    }
    return acc;
}

PowerSeries series_J(std::uint64_t m, std::uint64_t order) {
    PowerSeries g = series_G(m, order);
    PowerSeries out(order);
    CountValue running = 0;
    for (std::uint64_t k = 0; k <= order; ++k) {
        running += g.coefficient(k);
        out.set_coefficient(k, running);
    }
    return out;
}

bool verify_ident6(std::uint64_t order) {
    PowerSeries acc = PowerSeries::constant(1, order);
    for (std::uint64_t power = 1; power <= order; ) {
        PowerSeries factor = PowerSeries::constant(1, order);
        factor.set_coefficient(power, 1);
        if (2 * power <= order) factor.set_coefficient(2 * power, 1);
        acc = series_multiply(acc, factor);
        if (power > order / 3) break;
        power *= 3;
    }
    for (std::uint64_t k = 0; k <= order; ++k)
        if (acc.coefficient(k) != 1) return false;
    return true;
}

} // namespace semifib
