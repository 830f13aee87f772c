#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace vispoly {

// Arbitrary-precision rational scalar. All arithmetic is exact; there is no
// floating-point anywhere in the computation path.
using Scalar = mpq_class;

inline int sign(const Scalar& v) { return sgn(v); }

// Parses "123", "-4.75", "1/3", "-7/2". Decimal text converts exactly
// (0.1 becomes 1/10). Returns nullopt on malformed input.
std::optional<Scalar> parse_scalar(const std::string& text);

// Emits "p/q" when the denominator is not 1, plain integer text otherwise.
// parse_scalar(format_scalar(v)) == v for every value.
std::string format_scalar(const Scalar& v);

// Bit length of the larger of |numerator|, denominator. Diagnostic only.
std::size_t scalar_bits(const Scalar& v);

// Fast exact path: value as int64 if it is an integer of small magnitude.
inline std::optional<std::int64_t> as_small_int(const Scalar& v) {
    const mpz_srcptr den = v.get_den().get_mpz_t();
    if (mpz_cmp_ui(den, 1) != 0) return std::nullopt;
    const mpz_srcptr num = v.get_num().get_mpz_t();
    if (!mpz_fits_slong_p(num)) return std::nullopt;
    const long n = mpz_get_si(num);
    if (n > (1L << 28) || n < -(1L << 28)) return std::nullopt;
    return static_cast<std::int64_t>(n);
}

}  // namespace vispoly
