#pragma once

#include <complex>
#include <string>
#include <variant>

#include "gainrank/gaussian_rational.hpp"

namespace gainrank {

enum class GainMode { Exact, Approx };

/// A complex number of modulus one attached to an oriented edge.
///
/// Exact gains are Gaussian rationals with re^2 + im^2 == 1 checked at construction
/// (1, -1, i, -i, (3+4i)/5, ...). Approximate gains store an angle theta and stand
/// for e^{i theta}; their modulus is one by construction.
class UnitGain {
public:
    /// The exact gain 1.
    UnitGain();

    /// Throws GainError unless re^2 + im^2 == 1 exactly.
    static UnitGain exact(const GaussianRational& z);
    static UnitGain exact(const mpq_class& re, const mpq_class& im) { return exact(GaussianRational(re, im)); }
    static UnitGain from_angle(double radians);

    static UnitGain one() { return {}; }
    static UnitGain minus_one() { return exact(GaussianRational(-1L)); }
    static UnitGain i() { return exact(GaussianRational::i()); }
    static UnitGain minus_i() { return exact(-GaussianRational::i()); }

    GainMode mode() const { return std::holds_alternative<GaussianRational>(value_) ? GainMode::Exact : GainMode::Approx; }
    bool is_exact() const { return mode() == GainMode::Exact; }

    /// Throws ModeError for approximate gains.
    const GaussianRational& exact_value() const;

    /// Angle in (-pi, pi]; computed with atan2 for exact gains.
    double angle() const;

    std::complex<double> to_complex() const;

    /// Conjugate, which is also the inverse for unit-modulus values.
    UnitGain conj() const;

    /// Product; both operands must share a mode (ModeError otherwise).
    UnitGain operator*(const UnitGain& rhs) const;
    UnitGain& operator*=(const UnitGain& rhs) { return *this = *this * rhs; }

    /// Exact gains compare exactly; approximate gains compare their stored angles.
    friend bool operator==(const UnitGain& a, const UnitGain& b) { return a.value_ == b.value_; }

    std::string to_string() const;

private:
    explicit UnitGain(std::variant<GaussianRational, double> v) : value_(std::move(v)) {}

    std::variant<GaussianRational, double> value_;
};

} // namespace gainrank
