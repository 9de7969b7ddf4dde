#include "rising/scalar.hpp"

#include "rising/error.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <charconv>
#include <cstdlib>

namespace rising {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::RangeError: return "RangeError";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotIncreasing: return "NotIncreasing";
        case ErrorKind::EnvelopeOrderViolated: return "EnvelopeOrderViolated";
        case ErrorKind::EndpointsNotPreserved: return "EndpointsNotPreserved";
        case ErrorKind::OverlapError: return "OverlapError";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::StageOverflow: return "StageOverflow";
        case ErrorKind::InternalOrderViolation: return "InternalOrderViolation";
        case ErrorKind::CapReached: return "CapReached";
        case ErrorKind::ReflectionCollision: return "ReflectionCollision";
        case ErrorKind::NotInImage: return "NotInImage";
        case ErrorKind::InvalidDisk: return "InvalidDisk";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

double to_double(const Rational& q) {
    const double d = q.get_d();
    if (!std::isfinite(d)) return d;
    const Rational exact(d);
    if (exact == q) return d;
    const double other = std::nextafter(d, q > exact ? HUGE_VAL : -HUGE_VAL);
    const Rational e1 = abs(q - exact);
    const Rational e2 = abs(Rational(other) - q);
    if (e2 < e1) return other;
    if (e2 == e1 && (std::bit_cast<std::uint64_t>(d) & 1u)) return other;
    return d;
}

const char* mode_name(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode parse_mode(const std::string& text) {
    if (text == "exact" || text == "rational") return Mode::exact;
    if (text == "float" || text == "floating" || text == "double") return Mode::floating;
    throw Error(ErrorKind::ParseError, "unknown arithmetic mode '" + text + "'");
}

namespace {

Rational parse_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long exponent = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) --exponent;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw Error(ErrorKind::ParseError, "not a number: '" + text + "'");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        const char* begin = text.data() + i;
        const char* end = text.data() + text.size();
        long e = 0;
        auto [ptr, ec] = std::from_chars(begin + (begin < end && *begin == '+' ? 1 : 0), end, e);
        if (ec != std::errc() || ptr != end) throw Error(ErrorKind::ParseError, "bad exponent in '" + text + "'");
        exponent += e;
        i = text.size();
    }
    if (i != text.size()) throw Error(ErrorKind::ParseError, "trailing characters in '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_decimal(text.substr(0, slash));
        Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + raw + "'");
        Rational q = num / den;
        q.canonicalize();
        return q;
    }
    return parse_decimal(text);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

Rational times_pow2(const Rational& x, long e) {
    Rational out;
    if (e >= 0)
        mpq_mul_2exp(out.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(out.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return out;
}

long floor_log2(double x) {
    int e = 0;
    std::frexp(x, &e);  // x = f * 2^e, f in [1/2, 1)
    return e - 1;
}

long floor_log2(const Rational& x) {
    long nb = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    long e = nb - db;
    return x >= times_pow2(Rational(1), e) ? e : e - 1;
}

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace rising
