#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ellmac {

/* All coefficient arithmetic is exact: GMP rationals, always canonical. */
using Rat = mpq_class;

struct param_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw param_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/* Parses "num/den" or "num". Exact; no floating input anywhere. */
inline Rat rat_parse(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw param_error("cannot parse rational: '" + text + "'");
    if (r.get_den() == 0) throw param_error("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw param_error("zero raised to negative power");
        return Rat(0);
    }
    Rat acc(1), b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/* Exact rational square root, when it exists. */
inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

/* Canonical text form "num/den", denominator always present. */
inline std::string rat_text(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace ellmac
