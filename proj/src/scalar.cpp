#include "stokes/scalar.hpp"

namespace stokes {

Rational Scalar::parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        Rational q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

Scalar Scalar::parse(const std::string& s) {
    // Accept "re" or "re+im i" / "re-im i" with rational parts.
    auto trail = s.find(' ');
    if (s.size() >= 2 && s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        if (!body.empty() && body.back() == ' ') body.pop_back();
        // split at the sign separating the two parts (skip position 0 and
        // any sign directly after '/')
        for (size_t p = 1; p < body.size(); ++p) {
            if ((body[p] == '+' || body[p] == '-') && body[p - 1] != '/') {
                Rational re = parse_rational(body.substr(0, p));
                std::string imtxt = body.substr(p);
                if (imtxt == "+") imtxt = "1";
                else if (imtxt == "-") imtxt = "-1";
                else if (imtxt[0] == '+') imtxt = imtxt.substr(1);
                return Scalar(re, parse_rational(imtxt));
            }
        }
        if (body.empty() || body == "+") return Scalar(Rational(0), Rational(1));
        if (body == "-") return Scalar(Rational(0), Rational(-1));
        return Scalar(Rational(0), parse_rational(body));
    }
    (void)trail;
    return Scalar(parse_rational(s));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string out = rational_str(re_);
    if (im_ > 0) out += "+";
    out += rational_str(im_) + " i";
    return out;
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Scalar binomial(const Scalar& alpha, unsigned long m) {
    // C(alpha, m) = alpha (alpha-1) ... (alpha-m+1) / m!
    Scalar acc(1);
    for (unsigned long j = 0; j < m; ++j) {
        acc *= alpha - Scalar(static_cast<long>(j));
        acc /= Scalar(static_cast<long>(j) + 1);
    }
    return acc;
}

} // namespace stokes
