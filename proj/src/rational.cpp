#include "skeletal/rational.hpp"

#include <cctype>

namespace skeletal {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_bigint(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ValidationError("malformed integer literal");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw ValidationError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_bigint(text.substr(0, slash));
        BigInt den = parse_bigint(text.substr(slash + 1));
        if (den == 0) throw ValidationError("rational with zero denominator");
        return Rational(num, den);
    }

    // Decimal / scientific literal, parsed exactly.
    std::string_view s = text;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view epart = s.substr(e + 1);
        BigInt ev = parse_bigint(epart);
        if (ev < -100000 || ev > 100000) throw ValidationError("exponent out of range");
        exp10 = ev.convert_to<long long>();
        s = s.substr(0, e);
    }
    std::string digits;
    long long frac_len = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw ValidationError("malformed rational literal");
        if (!ip.empty() && !all_digits(ip)) throw ValidationError("malformed rational literal");
        if (!fp.empty() && !all_digits(fp)) throw ValidationError("malformed rational literal");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long long>(fp.size());
    } else {
        if (!all_digits(s)) throw ValidationError("malformed rational literal");
        digits = std::string(s);
    }
    if (digits.empty()) throw ValidationError("malformed rational literal");

    BigInt mant(digits);
    long long shift = exp10 - frac_len;
    BigInt num = mant, den = 1;
    if (shift >= 0)
        num *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift));
    else
        den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-shift));
    Rational q(num, den);
    return neg ? Rational(-q) : q;
}

}  // namespace skeletal
