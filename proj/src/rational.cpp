#include "tilekit/rational.hpp"

#include <cctype>
#include <ostream>

namespace tilekit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) throw ParseError("bad rational literal: '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    if (den.empty()) return Rational(mpq_class(n));

    // Denominator must be a plain positive integer; "p/0" and "p/-q" are rejected.
    if (!all_digits(den)) throw ParseError("bad rational denominator: '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tilekit
