#ifndef BIRANK_BIGINT_HPP
#define BIRANK_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace birank {

/* Exact sign-magnitude arbitrary-precision integer. Class counts and series
 * coefficients overflow 64 bits well within the precisions this library is
 * run at, so every coefficient in the project is a BigInt. */
using BigInt = mpz_class;

inline bool is_zero(const BigInt& x) { return mpz_sgn(x.get_mpz_t()) == 0; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace birank

#endif
