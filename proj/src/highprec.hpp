#pragma once

#include <gmpxx.h>

#include "cyclic/numeric.hpp"

namespace cyclic::highprec {

// Extended-precision cosine support for the iteration cross-checks.
// GMP floats carry no transcendentals, so pi is a stored constant and
// cos comes from its Taylor series (arguments stay inside [0, pi]).

inline const char* kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781"
    "6406286208998628034825342117067982148086513282306647093844609550582231"
    "7253594081284811174502841027019385211055596446229489549303819644288109"
    "7566593344612847564823378678316527120190914564856692346034861045432664"
    "8213393607260249141273724587006606315588174881520920962829254091715364"
    "36789259036001133053054882046652138414695194151160943305727036575959195"
    "3092186117381932611793105118548074462379962749567351885752724891227938"
    "183011949129833673362";

inline mpf_class pi(mp_bitcnt_t prec) {
    return mpf_class(kPiDigits, prec);
}

// cos(pi * num / den) at the given precision; requires 0 <= num/den <= 1.
inline mpf_class cos_pi_ratio(i64 num, i64 den, mp_bitcnt_t prec) {
    mpf_class x = pi(prec);
    x *= num;
    x /= den;
    mpf_class term(1, prec);
    mpf_class sum(1, prec);
    mpf_class x2 = x * x;
    mpf_class limit(1, prec);
    limit >>= (prec + 16);
    for (unsigned long k = 1; k < 4 * prec; ++k) {
        term *= x2;
        term /= (2 * k - 1) * (2 * k);
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
        if (term < limit && term > -limit) break;
    }
    return sum;
}

} // namespace cyclic::highprec
