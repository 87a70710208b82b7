#include "chilab/bigfloat.hpp"

#include <cctype>
#include <sstream>

#include "chilab/errors.hpp"

namespace chilab {

namespace mp = boost::multiprecision;

Real ln2() {
    static const Real value = mp::log(Real(2));
    return value;
}

Real log2(const Real& v) {
    if (v <= 0) throw DomainError("log2 of non-positive value");
    return mp::log(v) / ln2();
}

Real log2(const BigInt& v) {
    if (v <= 0) throw DomainError("log2 of non-positive integer");
    // Split off the power of two so huge integers convert without overflow
    // and the mantissa keeps its full 128 bits.
    const std::size_t bits = mp::msb(v);
    if (bits < 4000) return log2(Real(v));
    const std::size_t shift = bits - 256;
    const BigInt top = v >> shift;
    return log2(Real(top)) + Real(shift);
}

Real exp2(const Real& v) { return mp::exp(v * ln2()); }

BigInt floor_to_int(const Real& v) { return static_cast<BigInt>(mp::floor(v)); }

std::string to_decimal(const Real& v, int digits) { return v.str(digits); }

std::string to_hex(const Real& v) {
    if (v == 0) return "0x0p+0";
    std::string out = v < 0 ? "-0x1" : "0x1";
    int exponent = 0;
    Real m = mp::frexp(mp::abs(v), &exponent);  // [0.5, 1)
    m = m * 2 - 1;                               // fraction in [0, 1)
    --exponent;
    std::string frac;
    static constexpr char kDigits[] = "0123456789abcdef";
    for (int i = 0; i < kRealMantissaBits / 4 && m != 0; ++i) {
        m *= 16;
        const int d = static_cast<int>(mp::floor(m).convert_to<int>());
        frac.push_back(kDigits[d]);
        m -= d;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "p";
    out += exponent >= 0 ? "+" : "-";
    out += std::to_string(exponent >= 0 ? exponent : -exponent);
    return out;
}

Real from_hex(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    if (text.compare(pos, 2, "0x") != 0) throw DomainError("hex float must start with 0x: " + text);
    pos += 2;
    Real mantissa = 0;
    Real scale = 1;
    bool in_fraction = false;
    for (; pos < text.size() && text[pos] != 'p'; ++pos) {
        const char c = text[pos];
        if (c == '.') {
            in_fraction = true;
            continue;
        }
        if (!std::isxdigit(static_cast<unsigned char>(c))) throw DomainError("bad hex digit in " + text);
        const int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                                                  : std::tolower(c) - 'a' + 10;
        if (in_fraction) {
            scale /= 16;
            mantissa += scale * d;
        } else {
            mantissa = mantissa * 16 + d;
        }
    }
    if (pos >= text.size()) throw DomainError("hex float missing exponent: " + text);
    const int exponent = std::stoi(text.substr(pos + 1));
    Real value = mp::ldexp(mantissa, exponent);
    return negative ? Real(-value) : value;
}

std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(const std::string& text) {
    auto parse_plain = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw DomainError("not a non-negative integer: " + text);
        return BigInt(s);
    };
    if (auto caret = text.find('^'); caret != std::string::npos) {
        const BigInt base = parse_plain(text.substr(0, caret));
        const unsigned power = parse_plain(text.substr(caret + 1)).convert_to<unsigned>();
        return mp::pow(base, power);
    }
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        const BigInt mantissa = parse_plain(text.substr(0, e));
        const unsigned power = parse_plain(text.substr(e + 1)).convert_to<unsigned>();
        return mantissa * mp::pow(BigInt(10), power);
    }
    return parse_plain(text);
}

}  // namespace chilab
