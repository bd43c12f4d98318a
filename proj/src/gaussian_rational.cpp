#include "gainrank/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>

#include "gainrank/errors.hpp"

namespace gainrank {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational::GaussianRational(long re, long im) : re_(re), im_(im) {}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero Gaussian rational");
    const mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs)
{
    // Real operands are by far the most common case (gains +-1, real pivots).
    if (rhs.is_real()) {
        re_ *= rhs.re_;
        im_ *= rhs.re_;
        return *this;
    }
    if (is_real()) {
        im_ = re_ * rhs.im_;
        re_ *= rhs.re_;
        return *this;
    }
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero Gaussian rational");
    if (rhs.is_real()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.inverse();
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0)
        return rational_to_string(re_);
    std::string out;
    if (sgn(re_) != 0) {
        out = rational_to_string(re_);
        if (sgn(im_) > 0)
            out += '+';
    }
    out += rational_to_string(im_);
    out += 'i';
    return out;
}

mpq_class parse_rational(std::string_view text)
{
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw GainError("malformed rational literal '" + std::string(text) + "'");

    std::string num_str(num);
    if (num_str.front() == '+')
        num_str.erase(0, 1);
    mpz_class p(num_str, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw GainError("zero denominator in '" + std::string(text) + "'");
    mpq_class r(p, q);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const mpq_class& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace gainrank
