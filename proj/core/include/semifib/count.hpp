#ifndef SEMIFIB_COUNT_HPP
#define SEMIFIB_COUNT_HPP

#include <gmpxx.h>

namespace semifib {

/* Arbitrary-precision count. sf grows through iterated partial sums, so
 * fixed-width integers would overflow silently well inside the ranges the
 * verifier sweeps. */
using CountValue = mpz_class;

inline bool is_even(const CountValue& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

} // namespace semifib

#endif
