#pragma once

#include <gmpxx.h>

#include <string>

namespace ktwist {

// Exact coefficient types. All ring arithmetic in this library is exact;
// doubles appear only in the Verlinde-point oracle.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Int binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return out;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace ktwist
