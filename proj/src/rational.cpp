#include "apxpoly/rational.hpp"

#include <cctype>

namespace apxpoly {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ParseError("rational denominator must be non-zero");
    }
    Rational q;
    BigInt n = num;
    BigInt d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    mpq_set_num(q.backend().data(), n.backend().data());
    mpq_set_den(q.backend().data(), d.backend().data());
    mpq_canonicalize(q.backend().data());
    return q;
}

Rational parse_rational(std::string_view text) {
    // strip surrounding blanks
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    const auto slash = text.find('/');
    const auto check_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!check_int(text)) throw ParseError("bad rational literal: " + std::string(text));
            return Rational(BigInt(std::string(text)));
        }
        std::string_view num_text = text.substr(0, slash);
        std::string_view den_text = text.substr(slash + 1);
        if (!check_int(num_text) || !check_int(den_text)) {
            throw ParseError("bad rational literal: " + std::string(text));
        }
        return make_rational(BigInt(std::string(num_text)), BigInt(std::string(den_text)));
    } catch (const std::runtime_error& e) {
        throw ParseError(std::string("bad rational literal: ") + std::string(text));
    }
}

std::string to_string(const Rational& value) {
    const BigInt n = num(value);
    const BigInt d = den(value);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

BigInt isqrt_floor(const BigInt& v) {
    if (v < 0) throw Error("isqrt_floor of a negative value");
    return boost::multiprecision::sqrt(v);
}

namespace {

// sqrt(a/b) = sqrt(a*b)/b; scaling by t tightens the enclosure to 1/(b*t).
Rational sqrt_bound(const Rational& q, const Rational& prec, bool upper) {
    if (q < 0) throw Error("sqrt of a negative value");
    if (prec <= 0) throw Error("sqrt enclosure needs positive precision");
    const BigInt a = num(q);
    const BigInt b = den(q);
    // enclosure width is 1/(b*t); grow t until that is within prec
    BigInt t = 1;
    while (b * t * num(prec) < den(prec)) t *= 2;
    const BigInt root = isqrt_floor(a * b * t * t);
    if (upper && root * root != a * b * t * t) {
        return make_rational(root + 1, b * t);
    }
    return make_rational(root, b * t);
}

}  // namespace

Rational sqrt_lower(const Rational& q, const Rational& prec) { return sqrt_bound(q, prec, false); }

Rational sqrt_upper(const Rational& q, const Rational& prec) { return sqrt_bound(q, prec, true); }

int compare_sqrt(const Rational& a, const Rational& c) {
    if (a < 0) throw Error("compare_sqrt of a negative value");
    if (c < 0) return 1;
    const Rational diff = a - c * c;
    return rat_sign(diff);
}

}  // namespace apxpoly
