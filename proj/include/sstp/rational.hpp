#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sstp {

// Exact rational arithmetic for costs and probabilities. Everything stays
// rational until the LP boundary, where it is converted to double once.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) { return boost::rational_cast<double>(r); }

// Parses "3", "-2", "0.5", "1/3". Decimal digits are limited so the
// denominator stays well inside 64 bits.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rat(num, den);
    }
    std::size_t dot = text.find('.');
    if (dot == std::string::npos) return Rat(std::stoll(text));
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 12) frac = frac.substr(0, 12);
    std::string digits = text.substr(0, dot) + frac;
    bool neg = !digits.empty() && digits[0] == '-';
    long long mant = std::stoll(digits);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    (void)neg;
    return Rat(mant, den);
}

// Canonical text form: integer when the denominator is 1, else "num/den".
inline std::string format_rational(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace sstp
