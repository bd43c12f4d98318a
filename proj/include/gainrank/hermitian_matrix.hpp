#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "gainrank/gain_graph.hpp"
#include "gainrank/gaussian_rational.hpp"

namespace gainrank {

/// Dense n x n complex matrix in row-major order, holding either exact Gaussian
/// rationals or doubles. Produced by adjacency_matrix() it is Hermitian with a zero
/// diagonal and unit-modulus nonzero entries; from_entries() accepts anything square
/// so that callers can probe the defensive checks in linalg.
class HermitianMatrix {
public:
    using ExactStorage = std::vector<GaussianRational>;
    using ApproxStorage = std::vector<std::complex<double>>;

    HermitianMatrix() : storage_(ExactStorage{}) {}

    /// Throws MatrixError unless entries.size() == n * n.
    static HermitianMatrix from_entries(std::size_t n, ExactStorage entries);
    static HermitianMatrix from_entries(std::size_t n, ApproxStorage entries);

    std::size_t dim() const { return n_; }
    bool is_exact() const { return std::holds_alternative<ExactStorage>(storage_); }

    /// Throws ModeError for approximate matrices.
    const GaussianRational& exact(std::size_t i, std::size_t j) const;
    const ExactStorage& exact_entries() const;

    /// Entry as a double-precision complex, converting exact values.
    std::complex<double> approx(std::size_t i, std::size_t j) const;

    /// Exact: entrywise equality with the conjugate transpose. Approximate: within
    /// a relative 1e-12 of it.
    bool is_hermitian() const;

private:
    std::size_t n_ = 0;
    std::variant<ExactStorage, ApproxStorage> storage_;
};

/// A(G, phi): a_ij = phi(e_ij) when i ~ j, else 0. Exact for exact-gain graphs.
HermitianMatrix adjacency_matrix(const GainGraph& g);

} // namespace gainrank
