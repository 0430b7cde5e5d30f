#include "kbchroma/apfloat.hpp"

#include <cstdio>
#include <vector>

namespace kbchroma {

std::string ApFloat::str(size_t digits) const {
    if (digits == 0) digits = size_t(double(precision()) * 0.30103) + 2;
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%zuRg", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

ApComplex eval_complex(const RationalPoly& p, const ApComplex& q) {
    const long prec = q.precision();
    ApComplex s(prec);
    for (int k = p.degree(); k >= 0; --k) {
        s = s * q;
        s.re += ApFloat::from(p.coeff(k), prec);
    }
    return s;
}

ApFloat eval_ap(const RationalPoly& p, const ApFloat& q) {
    const long prec = q.precision();
    ApFloat s(prec);
    for (int k = p.degree(); k >= 0; --k) s = s * q + ApFloat::from(p.coeff(k), prec);
    return s;
}

}  // namespace kbchroma
