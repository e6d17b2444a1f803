#include "sdg/rational.hpp"

#include <cctype>

namespace sdg {

Rational rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw usage_error("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw usage_error("bad rational literal: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw domain_error("rational with zero denominator: '" + text + "'");
    }
    mpq_canonicalize(q);
    Rational out(q);
    mpq_clear(q);
    return out;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

} // namespace sdg
