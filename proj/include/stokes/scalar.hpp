#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "stokes/errors.hpp"

namespace stokes {

using Rational = mpq_class;

/// Gaussian rational re + im*i. The coefficient field of every series in
/// the library; all arithmetic is exact, conversion to floating point
/// happens only at evaluation time.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const Rational& re) : re_(re), im_(0) { canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) { canonicalize(); }
    Scalar(long num, long den) : re_(num, den), im_(0) { canonicalize(); }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// Parse "p/q" or "p"; whitespace not allowed.
    static Rational parse_rational(const std::string& s);

    /// Parse either a single rational "p/q" (real) or "p/q+p/q i".
    static Scalar parse(const std::string& s);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    /// True when both parts are integers (Gaussian integer).
    bool is_gaussian_integer() const {
        return re_.get_den() == 1 && im_.get_den() == 1;
    }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// re^2 + im^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const {
        Rational n = norm();
        if (n == 0) throw MathError("Scalar: division by zero");
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(long e) const;

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    /// Canonical "p/q" (always with denominator), or "p/q+r/s i".
    std::string str() const;

private:
    void canonicalize() { re_.canonicalize(); im_.canonicalize(); }

    Rational re_, im_;
};

/// n! as an exact rational.
Rational factorial(unsigned long n);

/// Binomial coefficient C(alpha, m) for rational alpha, exact.
Scalar binomial(const Scalar& alpha, unsigned long m);

std::string rational_str(const Rational& q);

} // namespace stokes
