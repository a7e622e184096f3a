#ifndef CWL_NUMERIC_HPP
#define CWL_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cwl {

// Exact nonnegative counters and exact rationals. Inequality checks never
// leave these types; floating point is confined to display and to the
// iterated-logarithm helpers.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Count pow_count(const Count& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// num^e / den^e, exponentiated separately; no rounding anywhere.
inline Rational pow_rational(const Rational& base, unsigned exp) {
    return Rational(pow_count(boost::multiprecision::numerator(base), exp),
                    pow_count(boost::multiprecision::denominator(base), exp));
}

// Smallest integer >= value.
inline Count ceil_rational(const Rational& value) {
    Count num = boost::multiprecision::numerator(value);
    Count den = boost::multiprecision::denominator(value);  // always > 0
    Count q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

inline std::string to_decimal(const Count& value) { return value.str(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& value) {
    Count num = boost::multiprecision::numerator(value);
    Count den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// value rendered as a rounded fixed-point decimal string with `digits`
// fractional digits, computed in exact integer arithmetic.
inline std::string decimal_ratio(const Rational& value, int digits = 6) {
    Count num = boost::multiprecision::numerator(value);
    Count den = boost::multiprecision::denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    Count scale = pow_count(10, static_cast<unsigned>(digits));
    Count scaled = (num * scale * 2 + den) / (den * 2);  // round half up
    Count whole = scaled / scale;
    Count remainder = scaled % scale;
    std::string frac = remainder.str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = whole.str();
    if (digits > 0) out += "." + frac;
    return negative ? "-" + out : out;
}

}  // namespace cwl

#endif
