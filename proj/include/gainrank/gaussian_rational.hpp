#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gainrank {

/// Exact complex number re + im*i with arbitrary-precision rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(mpq_class re, mpq_class im = 0);
    GaussianRational(long re, long im = 0);

    static GaussianRational i() { return {0L, 1L}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    /// |z|^2, exact.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }

    // Multiplicative inverse; throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// "p/q" or "p" for the real part, same for the imaginary part, e.g. "3/5+4/5i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Parses "p", "-p", "p/q" into a canonical rational. Throws GainError on malformed text
/// or zero denominator.
mpq_class parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const mpq_class& q);

} // namespace gainrank
