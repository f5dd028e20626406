#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace univoque {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor/ceil toward the exact rational value; cpp_int division truncates toward zero.
inline Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
}

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Boost's number types predate operator<=>.
inline std::strong_ordering rat_cmp(const Rat& a, const Rat& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// Accepts "p", "p/q", and decimal literals like "1.787". Throws std::runtime_error
// (wrapped into a ParseFailure DomainError by callers that own error codes).
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::runtime_error("zero denominator");
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.empty()) throw std::runtime_error("bad decimal literal '" + s + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        if (head.empty()) head = "0";
        Int scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Rat v = Rat(Int(head)) + Rat(Int(tail), scale);
        return neg ? Rat(-v) : v;
    }
    return Rat(Int(s));
}

}  // namespace univoque
