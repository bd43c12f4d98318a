#pragma once

#include <compare>
#include <cstddef>

#include "gainrank/gain_graph.hpp"
#include "gainrank/hermitian_matrix.hpp"

namespace gainrank {

/// Relative tolerance for the floating-point backend: an eigenvalue counts as zero
/// when |lambda| <= tol * n * max|a_ij|.
inline constexpr double kDefaultTolerance = 1e-9;

struct Inertia {
    std::size_t p_plus = 0;
    std::size_t n_minus = 0;
    std::size_t zero = 0;

    std::size_t rank() const { return p_plus + n_minus; }
    std::size_t dim() const { return p_plus + n_minus + zero; }

    friend auto operator<=>(const Inertia&, const Inertia&) = default;
};

/// Rank over C by Gaussian elimination in exact Gaussian-rational arithmetic.
/// Pivot is the first nonzero entry in column order; no tolerance is involved.
/// Throws ModeError on an approximate matrix.
std::size_t rank_exact(const HermitianMatrix& m);

/// Number of eigenvalues with |lambda| > tol * n * max|a_ij|. Works on either storage
/// (exact entries are converted to double). Throws MatrixError for non-finite entries
/// or tol <= 0.
std::size_t rank_approx(const HermitianMatrix& m, double tol = kDefaultTolerance);

/// Sign counts of the eigenvalues.
///
/// Exact matrices are reduced by Hermitian congruence: a nonzero diagonal pivot
/// contributes its sign, otherwise a 2x2 block [[0, a], [conj(a), 0]] contributes one
/// positive and one negative eigenvalue, and the Schur complement carries the rest
/// (Sylvester / Haynsworth). Approximate matrices use a Hermitian eigensolver with the
/// rank_approx threshold. Throws MatrixError on non-Hermitian input.
Inertia inertia(const HermitianMatrix& m, double tol = kDefaultTolerance);

/// rank_exact for exact matrices, rank_approx otherwise.
std::size_t rank(const HermitianMatrix& m, double tol = kDefaultTolerance);

/// r(G, phi).
std::size_t graph_rank(const GainGraph& g, double tol = kDefaultTolerance);

} // namespace gainrank
