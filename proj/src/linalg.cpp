#include "gainrank/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "gainrank/errors.hpp"

namespace gainrank {

namespace {

Eigen::MatrixXcd to_eigen(const HermitianMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto z = m.approx(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw MatrixError("non-finite matrix entry");
            a(i, j) = z;
        }
    }
    return a;
}

// Absolute zero threshold tol * n * max|a_ij| and the eigenvalues of the matrix.
std::pair<double, Eigen::VectorXd> spectrum(const HermitianMatrix& m, double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw MatrixError("tolerance must be a positive finite number");
    const Eigen::MatrixXcd a = to_eigen(m);
    const double scale = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
    const double threshold = tol * static_cast<double>(m.dim()) * scale;
    if (m.dim() == 0 || scale == 0.0)
        return {threshold, Eigen::VectorXd::Zero(a.rows())};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw MatrixError("Hermitian eigensolver failed to converge");
    return {threshold, solver.eigenvalues()};
}

Inertia congruence_inertia(const HermitianMatrix& m)
{
    const std::size_t n = m.dim();
    std::vector<GaussianRational> a = m.exact_entries();
    auto at = [&](std::size_t i, std::size_t j) -> GaussianRational& { return a[i * n + j]; };

    std::vector<std::size_t> active(n);
    for (std::size_t k = 0; k < n; ++k)
        active[k] = k;

    Inertia result;
    while (!active.empty()) {
        const auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t k) { return !at(k, k).is_zero(); });
        if (diag != active.end()) {
            const std::size_t k = *diag;
            const mpq_class d = at(k, k).real();
            if (sgn(d) > 0)
                ++result.p_plus;
            else
                ++result.n_minus;
            active.erase(diag);
            // A' = A - a_k a_k^* / d over the remaining index set.
            for (std::size_t i : active) {
                if (at(i, k).is_zero())
                    continue;
                const GaussianRational factor = at(i, k) / GaussianRational(d);
                for (std::size_t j : active) {
                    if (!at(k, j).is_zero())
                        at(i, j) -= factor * at(k, j);
                }
            }
            continue;
        }

        // All remaining diagonal entries vanish; look for an off-diagonal pivot.
        std::size_t pi = n;
        std::size_t pj = n;
        for (std::size_t x = 0; x < active.size() && pi == n; ++x) {
            for (std::size_t y = x + 1; y < active.size(); ++y) {
                if (!at(active[x], active[y]).is_zero()) {
                    pi = active[x];
                    pj = active[y];
                    break;
                }
            }
        }
        if (pi == n) {
            result.zero += active.size();
            break;
        }

        // Block M = [[0, z], [conj(z), 0]] has eigenvalues +-|z|;
        // M^{-1} = [[0, 1/conj(z)], [1/z, 0]].
        ++result.p_plus;
        ++result.n_minus;
        const GaussianRational z = at(pi, pj);
        const GaussianRational inv_z = z.inverse();
        const GaussianRational inv_zbar = z.conj().inverse();
        std::erase_if(active, [&](std::size_t k) { return k == pi || k == pj; });
        for (std::size_t r : active) {
            const GaussianRational left_i = at(r, pi) * inv_zbar;
            const GaussianRational left_j = at(r, pj) * inv_z;
            if (left_i.is_zero() && left_j.is_zero())
                continue;
            for (std::size_t s : active) {
                GaussianRational delta;
                if (!left_i.is_zero() && !at(pj, s).is_zero())
                    delta += left_i * at(pj, s);
                if (!left_j.is_zero() && !at(pi, s).is_zero())
                    delta += left_j * at(pi, s);
                if (!delta.is_zero())
                    at(r, s) -= delta;
            }
        }
    }
    return result;
}

} // namespace

std::size_t rank_exact(const HermitianMatrix& m)
{
    const std::size_t n = m.dim();
    std::vector<GaussianRational> a = m.exact_entries();
    auto at = [&](std::size_t i, std::size_t j) -> GaussianRational& { return a[i * n + j]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && at(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            continue;
        if (pivot != rank)
            for (std::size_t j = col; j < n; ++j)
                std::swap(at(pivot, j), at(rank, j));
        const GaussianRational inv = at(rank, col).inverse();
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (at(i, col).is_zero())
                continue;
            const GaussianRational factor = at(i, col) * inv;
            for (std::size_t j = col + 1; j < n; ++j)
                if (!at(rank, j).is_zero())
                    at(i, j) -= factor * at(rank, j);
            at(i, col) = GaussianRational{};
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_approx(const HermitianMatrix& m, double tol)
{
    const auto [threshold, eigenvalues] = spectrum(m, tol);
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k)
        if (std::abs(eigenvalues[k]) > threshold)
            ++r;
    return r;
}

Inertia inertia(const HermitianMatrix& m, double tol)
{
    if (!m.is_hermitian())
        throw MatrixError("inertia requires a Hermitian matrix");
    if (m.is_exact())
        return congruence_inertia(m);
    const auto [threshold, eigenvalues] = spectrum(m, tol);
    Inertia result;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        if (eigenvalues[k] > threshold)
            ++result.p_plus;
        else if (eigenvalues[k] < -threshold)
            ++result.n_minus;
        else
            ++result.zero;
    }
    return result;
}

std::size_t rank(const HermitianMatrix& m, double tol)
{
    return m.is_exact() ? rank_exact(m) : rank_approx(m, tol);
}

std::size_t graph_rank(const GainGraph& g, double tol)
{
    return rank(adjacency_matrix(g), tol);
}

} // namespace gainrank
