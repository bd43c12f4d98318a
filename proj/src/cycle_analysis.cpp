#include "gainrank/cycle_analysis.hpp"

#include <cmath>
#include <set>
#include <string>

#include "gainrank/errors.hpp"

namespace gainrank {

std::string_view to_string(CycleType t)
{
    switch (t) {
    case CycleType::A: return "A";
    case CycleType::B: return "B";
    case CycleType::C: return "C";
    case CycleType::D: return "D";
    case CycleType::E: return "E";
    }
    return "?";
}

CycleType parse_cycle_type(std::string_view text)
{
    if (text == "A") return CycleType::A;
    if (text == "B") return CycleType::B;
    if (text == "C") return CycleType::C;
    if (text == "D") return CycleType::D;
    if (text == "E") return CycleType::E;
    throw ParameterError("unknown cycle type '" + std::string(text) + "' (expected A-E)");
}

bool parity_matches(std::size_t length, CycleType t)
{
    const bool even = length % 2 == 0;
    return even == (t == CycleType::A || t == CycleType::B);
}

UnitGain cycle_gain(const GainGraph& g, std::span<const Vertex> cycle)
{
    if (cycle.size() < 3)
        throw GraphError("a cycle needs at least 3 vertices");
    if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != cycle.size())
        throw GraphError("cycle repeats a vertex");
    UnitGain product = g.is_exact() ? UnitGain::one() : UnitGain::from_angle(0.0);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const Vertex from = cycle[k];
        const Vertex to = cycle[(k + 1) % cycle.size()];
        if (from >= g.order() || to >= g.order())
            throw GraphError("cycle vertex out of range");
        const auto gain = g.gain(from, to);
        if (!gain)
            throw GraphError("not a cycle: " + std::to_string(from) + " and " + std::to_string(to) + " are not adjacent");
        product *= *gain;
    }
    return product;
}

CycleType classify_cycle(std::size_t length, const UnitGain& product, double tol)
{
    if (length < 3)
        throw ParameterError("cycle length must be at least 3");
    const bool even = length % 2 == 0;

    if (product.is_exact()) {
        const GaussianRational& z = product.exact_value();
        if (even) {
            const long target = (length / 2) % 2 == 0 ? 1 : -1;
            return z == GaussianRational(target) ? CycleType::A : CycleType::B;
        }
        const int sign = ((length - 1) / 2) % 2 == 0 ? 1 : -1;
        const int s = sign * sgn(z.real());
        return s > 0 ? CycleType::C : (s < 0 ? CycleType::D : CycleType::E);
    }

    const std::complex<double> z = product.to_complex();
    if (even) {
        const double target = (length / 2) % 2 == 0 ? 1.0 : -1.0;
        if (std::abs(z - target) < tol)
            throw AmbiguityError("ambiguous Type A boundary: approximate gain product within tolerance of " +
                                 std::to_string(static_cast<int>(target)));
        return CycleType::B;
    }
    const double sign = ((length - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    const double re = sign * z.real();
    if (std::abs(re) < tol)
        throw AmbiguityError("ambiguous Type E boundary: |Re((-1)^((l-1)/2) phi(C))| below tolerance");
    return re > 0 ? CycleType::C : CycleType::D;
}

Inertia cycle_inertia_closed_form(std::size_t l, CycleType t)
{
    if (l < 3)
        throw ParameterError("cycle length must be at least 3");
    if (!parity_matches(l, t))
        throw ParameterError("Type " + std::string(to_string(t)) + " is incompatible with cycle length " + std::to_string(l));
    Inertia in;
    switch (t) {
    case CycleType::A: in.p_plus = (l - 2) / 2; in.n_minus = (l - 2) / 2; break;
    case CycleType::B: in.p_plus = l / 2;       in.n_minus = l / 2;       break;
    case CycleType::C: in.p_plus = (l + 1) / 2; in.n_minus = (l - 1) / 2; break;
    case CycleType::D: in.p_plus = (l - 1) / 2; in.n_minus = (l + 1) / 2; break;
    case CycleType::E: in.p_plus = (l - 1) / 2; in.n_minus = (l - 1) / 2; break;
    }
    in.zero = l - in.p_plus - in.n_minus;
    return in;
}

std::size_t path_rank(std::size_t length)
{
    if (length == 0)
        throw ParameterError("path must have at least one vertex");
    return length % 2 == 0 ? length : length - 1;
}

CycleRecord make_cycle_record(const GainGraph& g, std::vector<Vertex> cycle, double tol)
{
    CycleRecord rec{std::move(cycle), UnitGain::one(), std::nullopt};
    rec.gain_product = cycle_gain(g, rec.vertices);
    try {
        rec.type = classify_cycle(rec.length(), rec.gain_product, tol);
    } catch (const AmbiguityError&) {
        rec.type = std::nullopt;
    }
    return rec;
}

} // namespace gainrank
