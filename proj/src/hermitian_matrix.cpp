#include "gainrank/hermitian_matrix.hpp"

#include <cmath>
#include <string>

#include "gainrank/errors.hpp"

namespace gainrank {

HermitianMatrix HermitianMatrix::from_entries(std::size_t n, ExactStorage entries)
{
    if (entries.size() != n * n)
        throw MatrixError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries.size()));
    HermitianMatrix m;
    m.n_ = n;
    m.storage_ = std::move(entries);
    return m;
}

HermitianMatrix HermitianMatrix::from_entries(std::size_t n, ApproxStorage entries)
{
    if (entries.size() != n * n)
        throw MatrixError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries.size()));
    HermitianMatrix m;
    m.n_ = n;
    m.storage_ = std::move(entries);
    return m;
}

const GaussianRational& HermitianMatrix::exact(std::size_t i, std::size_t j) const
{
    return exact_entries().at(i * n_ + j);
}

const HermitianMatrix::ExactStorage& HermitianMatrix::exact_entries() const
{
    if (const auto* e = std::get_if<ExactStorage>(&storage_))
        return *e;
    throw ModeError("exact entries requested from an approximate matrix");
}

std::complex<double> HermitianMatrix::approx(std::size_t i, std::size_t j) const
{
    if (const auto* e = std::get_if<ExactStorage>(&storage_))
        return e->at(i * n_ + j).to_complex();
    return std::get<ApproxStorage>(storage_).at(i * n_ + j);
}

bool HermitianMatrix::is_hermitian() const
{
    if (const auto* e = std::get_if<ExactStorage>(&storage_)) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                if (!((*e)[i * n_ + j] == (*e)[j * n_ + i].conj()))
                    return false;
        return true;
    }
    const auto& a = std::get<ApproxStorage>(storage_);
    double scale = 0.0;
    for (const auto& z : a)
        scale = std::max(scale, std::abs(z));
    const double eps = 1e-12 * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (std::abs(a[i * n_ + j] - std::conj(a[j * n_ + i])) > eps)
                return false;
    return true;
}

HermitianMatrix adjacency_matrix(const GainGraph& g)
{
    const std::size_t n = g.order();
    if (g.is_exact()) {
        HermitianMatrix::ExactStorage a(n * n);
        for (const auto& e : g.edges()) {
            a[e.u * n + e.v] = e.gain.exact_value();
            a[e.v * n + e.u] = e.gain.exact_value().conj();
        }
        return HermitianMatrix::from_entries(n, std::move(a));
    }
    HermitianMatrix::ApproxStorage a(n * n);
    for (const auto& e : g.edges()) {
        a[e.u * n + e.v] = e.gain.to_complex();
        a[e.v * n + e.u] = std::conj(e.gain.to_complex());
    }
    return HermitianMatrix::from_entries(n, std::move(a));
}

} // namespace gainrank
