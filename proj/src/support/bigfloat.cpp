#include "melab/support/bigfloat.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "melab/support/errors.hpp"

namespace melab::support {

std::string Real::to_hex() const {
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) throw NumericalFailureError("cannot serialize non-finite Real");
    mpfr_exp_t e = 0;
    std::size_t ndigits = static_cast<std::size_t>(prec() / 4 + 3);
    char* s = mpfr_get_str(nullptr, &e, 16, ndigits, v_, MPFR_RNDN);
    std::string out = std::string(s) + "p" + std::to_string(static_cast<long>(e));
    mpfr_free_str(s);
    return out;
}

Real Real::from_hex(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (s == "0") return r;
    auto pos = s.rfind('p');
    if (pos == std::string::npos) throw IoError("malformed Real literal: " + s);
    std::string mant = s.substr(0, pos);
    long e = std::strtol(s.c_str() + pos + 1, nullptr, 10);
    // mpfr_get_str semantics: value = 0.mant * 16^e
    std::string full = (mant[0] == '-' ? "-0." + mant.substr(1) : "0." + mant) + "@" + std::to_string(e);
    if (mpfr_set_str(r.v_, full.c_str(), 16, MPFR_RNDN) != 0)
        throw IoError("unparseable Real literal: " + s);
    return r;
}

std::string Real::str(int digits10) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits10);
    char buf[512];
    mpfr_snprintf(buf, sizeof(buf), fmt, v_);
    return buf;
}

}  // namespace melab::support
