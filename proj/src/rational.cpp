#include "rlb/rational.hpp"

#include <cctype>

namespace rlb {

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

Rational parse_rational(const std::string& text, const std::string& where) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer_token(num) || !is_integer_token(den))
        throw_schema(where + ": invalid rational \"" + text + "\"");
    BigInt p(num), q(den);
    if (q == 0)
        throw_schema(where + ": invalid rational \"" + text + "\" (zero denominator)");
    return Rational(p, q);
}

std::string rational_to_string(const Rational& value) {
    return value.str();
}

std::string rational_to_decimal(const Rational& value, int digits) {
    const bool negative = value < 0;
    Rational mag = negative ? Rational(-value) : value;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero: floor(mag * scale + 1/2)
    Rational scaled = mag * Rational(scale) + Rational(1, 2);
    BigInt total = boost::multiprecision::numerator(scaled) /
                   boost::multiprecision::denominator(scaled);
    BigInt intpart = total / scale;
    BigInt frac = total % scale;
    std::string fracs = frac.str();
    fracs.insert(fracs.begin(), digits - static_cast<int>(fracs.size()), '0');
    std::string out = (negative && total != 0 ? "-" : "") + intpart.str();
    if (digits > 0) out += "." + fracs;
    return out;
}

double rational_to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace rlb
