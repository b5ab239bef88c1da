#include "kassoc/rational.hpp"

#include <cctype>

namespace kassoc {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s) {
    if (!is_integer_literal(s)) throw Error("malformed rational: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error("malformed rational: empty string");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_integer(s.substr(0, slash));
        std::string den_s = s.substr(slash + 1);
        if (!den_s.empty() && (den_s[0] == '-' || den_s[0] == '+'))
            throw Error("malformed rational: '" + raw + "'");
        Integer den = parse_integer(den_s);
        if (den == 0) throw Error("zero denominator in '" + raw + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        if (fp.empty() || !is_integer_literal(ip) || !is_integer_literal(fp) || fp[0] == '-' || fp[0] == '+')
            throw Error("malformed rational: '" + raw + "'");
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        Rational q(Integer(ip + fp, 10), den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace kassoc
