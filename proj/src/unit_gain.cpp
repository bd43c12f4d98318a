#include "gainrank/unit_gain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gainrank/errors.hpp"

namespace gainrank {

namespace {

double wrap_angle(double theta)
{
    theta = std::remainder(theta, 2.0 * std::numbers::pi);
    if (theta <= -std::numbers::pi)
        theta += 2.0 * std::numbers::pi;
    return theta;
}

} // namespace

UnitGain::UnitGain() : value_(GaussianRational(1L)) {}

UnitGain UnitGain::exact(const GaussianRational& z)
{
    if (z.norm() != 1)
        throw GainError("gain not unit modulus: " + z.to_string() + " has |z|^2 = " + rational_to_string(z.norm()));
    return UnitGain(z);
}

UnitGain UnitGain::from_angle(double radians)
{
    if (!std::isfinite(radians))
        throw GainError("non-finite gain angle");
    return UnitGain(wrap_angle(radians));
}

const GaussianRational& UnitGain::exact_value() const
{
    if (const auto* z = std::get_if<GaussianRational>(&value_))
        return *z;
    throw ModeError("exact value requested from an approximate gain");
}

double UnitGain::angle() const
{
    if (const auto* theta = std::get_if<double>(&value_))
        return *theta;
    const auto c = std::get<GaussianRational>(value_).to_complex();
    return std::atan2(c.imag(), c.real());
}

std::complex<double> UnitGain::to_complex() const
{
    if (const auto* theta = std::get_if<double>(&value_))
        return std::polar(1.0, *theta);
    return std::get<GaussianRational>(value_).to_complex();
}

UnitGain UnitGain::conj() const
{
    if (const auto* theta = std::get_if<double>(&value_))
        return UnitGain(wrap_angle(-*theta));
    return UnitGain(std::get<GaussianRational>(value_).conj());
}

UnitGain UnitGain::operator*(const UnitGain& rhs) const
{
    if (mode() != rhs.mode())
        throw ModeError("cannot multiply exact and approximate gains");
    if (is_exact())
        return UnitGain(std::get<GaussianRational>(value_) * std::get<GaussianRational>(rhs.value_));
    return UnitGain(wrap_angle(std::get<double>(value_) + std::get<double>(rhs.value_)));
}

std::string UnitGain::to_string() const
{
    if (is_exact())
        return std::get<GaussianRational>(value_).to_string();
    std::ostringstream out;
    out.precision(17);
    out << "e^(" << std::get<double>(value_) << "i)";
    return out.str();
}

} // namespace gainrank
