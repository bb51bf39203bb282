#ifndef RESLAT_RATIONAL_HPP
#define RESLAT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace reslat {

// Exact rational scalar used throughout. No floating point in any computation.
using Rat = mpq_class;

// gmpxx lacks long long constructors; on this platform long carries 64 bits.
static_assert(sizeof(long) == sizeof(long long), "64-bit long expected");

inline Rat to_rat(long long x) { return Rat(static_cast<long>(x)); }
inline mpz_class to_mpz(long long x) { return mpz_class(static_cast<long>(x)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long long to_long(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_long: not an integer: " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("to_long: out of range");
    return q.get_num().get_si();
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Rat q;
    try {
        if (q.set_str(s, 10) != 0) return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

}  // namespace reslat

#endif
