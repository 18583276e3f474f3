#include "oklab/rational.hpp"

#include <cctype>
#include <limits>

#include "oklab/errors.hpp"

namespace oklab {

Int floor_rat(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r); // > 0, canonical
    Int q = num / den;        // truncates toward zero
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

Int ceil_rat(const Rational& r) { return -floor_rat(-r); }

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw precondition_error("integer out of machine range: " + v.str());
    return v.convert_to<long long>();
}

Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational parse_rational(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    s = s.substr(b, e - b);
    if (s.empty()) throw validation_error("empty rational literal");

    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s)) throw validation_error("bad rational literal: " + std::string(s));
            return Rational(Int(std::string(s)));
        }
        std::string_view ps = s.substr(0, slash), qs = s.substr(slash + 1);
        if (!is_int(ps) || !is_int(qs))
            throw validation_error("bad rational literal: " + std::string(s));
        Int p{std::string(ps)};
        Int q{std::string(qs)};
        if (q == 0) throw validation_error("zero denominator: " + std::string(s));
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("bad rational literal: " + std::string(s));
    }
}

std::string rat_to_string(const Rational& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Int pow10(int e) {
    Int v = 1;
    for (int i = 0; i < e; ++i) v *= 10;
    return v;
}

} // namespace

std::string decimal_approx(const Rational& r, int significant_digits) {
    const int sig = significant_digits;
    if (r == 0) return "0";
    std::string sign = r < 0 ? "-" : "";
    Int p = numerator(abs_rat(r)), q = denominator(abs_rat(r));

    // exponent e with 10^e <= p/q < 10^(e+1)
    int e = static_cast<int>(p.str().size()) - static_cast<int>(q.str().size());
    while (p * pow10(e < 0 ? -e : 0) < q * pow10(e > 0 ? e : 0)) --e;
    while (p * pow10(e + 1 < 0 ? -(e + 1) : 0) >= q * pow10(e + 1 > 0 ? e + 1 : 0)) ++e;

    // round(p/q * 10^(sig-1-e)) with ties away from zero
    int shift = sig - 1 - e;
    Int num = p * pow10(shift > 0 ? shift : 0);
    Int den = q * pow10(shift < 0 ? -shift : 0);
    Int scaled = (2 * num + den) / (2 * den);
    if (scaled >= pow10(sig)) { // rounding carried into one more digit
        scaled /= 10;
        ++e;
    }

    std::string digits = scaled.str();
    while (static_cast<int>(digits.size()) < sig) digits.insert(digits.begin(), '0');

    std::string out;
    if (e >= sig - 1) {
        out = digits + std::string(e + 1 - sig, '0');
    } else if (e >= 0) {
        out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    } else {
        out = "0." + std::string(-e - 1, '0') + digits;
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return sign + out;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec to_rat_vec(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(x);
    return out;
}

} // namespace oklab
