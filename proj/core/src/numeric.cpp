#include "coapprox/numeric.hpp"

#include "coapprox/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace coapprox {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("invalid integer: '" + std::string(s) + "'");
    BigInt v{std::string(s)};
    if (neg) v = -v;
    return v;
}

Rational parse_decimal(std::string_view s) {
    const std::string_view original = s;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }

    long long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view es = s.substr(epos + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6)
            throw ParseError("invalid exponent in '" + std::string(original) + "'");
        for (char c : es) exponent = exponent * 10 + (c - '0');
        if (eneg) exponent = -exponent;
        s = s.substr(0, epos);
    }

    std::string_view ipart = s, fpart;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        ipart = s.substr(0, dot);
        fpart = s.substr(dot + 1);
    }
    if (ipart.empty() && fpart.empty())
        throw ParseError("invalid number: '" + std::string(original) + "'");
    if ((!ipart.empty() && !all_digits(ipart)) || (!fpart.empty() && !all_digits(fpart)))
        throw ParseError("invalid number: '" + std::string(original) + "'");

    BigInt digits = 0;
    for (char c : ipart) digits = digits * 10 + (c - '0');
    for (char c : fpart) digits = digits * 10 + (c - '0');

    long long scale = exponent - static_cast<long long>(fpart.size());
    BigInt num = digits, den = 1;
    if (scale > 0)
        num *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale));
    else if (scale < 0)
        den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-scale));
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    return parse_decimal(text);
}

std::string rational_to_string(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) {
        s += '/';
        s += denominator(value).str();
    }
    return s;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw Error("cannot convert non-finite double to rational");
    if (value == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5, 1)
    long long scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    if (exp > 0)
        r *= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(exp)));
    else if (exp < 0)
        r /= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(-exp)));
    return r;
}

Rational snap_to_rational(double value, double tol) {
    if (!std::isfinite(value)) throw Error("cannot snap non-finite double");
    if (tol <= 0) return rational_from_double(value);

    // Continued-fraction convergents of value; the first one within tol is
    // the smallest-denominator rational in the interval.
    double x = value;
    BigInt p0 = 1, q0 = 0;  // h_{-1}/k_{-1}
    BigInt p1 = 0, q1 = 1;  // will become h_0/k_0 after first step
    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(x) > 9.0e15) break;  // a_i no longer representable
        double fl = std::floor(x);
        BigInt a(static_cast<long long>(fl));
        BigInt p2 = a * p0 + p1;
        BigInt q2 = a * q0 + q1;
        p1 = p0; q1 = q0;
        p0 = p2; q0 = q2;
        Rational cand(p0, q0);
        if (std::abs(to_double(cand) - value) <= tol) return cand;
        double frac = x - fl;
        if (frac < 1e-18) break;
        x = 1.0 / frac;
    }
    return rational_from_double(value);
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    if (value == 0) return Rational(0);
    const BigInt num = numerator(value), den = denominator(value);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

std::string format_double(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace coapprox
