#include "graphlaw/rational.hpp"

#include <cctype>
#include <cstdio>

#include "graphlaw/errors.hpp"

namespace graphlaw {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("bad rational: '" + text + "'");
    // base must be pinned: the string constructor's default treats a leading
    // zero as octal
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow2_inverse(unsigned r) {
    mpz_class den = mpz_class(1) << r;
    return Rational(mpz_class(1), den);
}

Rational mod_one(const Rational& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational out = q - Rational(fl);
    out.canonicalize();
    return out;
}

Rational rational_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

std::string decimal6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace graphlaw
