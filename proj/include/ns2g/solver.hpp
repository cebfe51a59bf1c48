#pragma once

#include <memory>
#include <vector>

#include "ns2g/sparse.hpp"
#include "ns2g/types.hpp"

namespace ns2g {

/// Sparse LU factorization with partial pivoting, reusable across right-hand
/// sides. Immutable once built; solve() may be called concurrently.
class Factorization {
  public:
    /// Throws SolverError for singular-to-tolerance matrices, naming the
    /// failing pivot index when known.
    explicit Factorization(const SparseMatrix& matrix);
    ~Factorization();
    Factorization(Factorization&&) noexcept;
    Factorization& operator=(Factorization&&) noexcept;
    Factorization(const Factorization&) = delete;
    Factorization& operator=(const Factorization&) = delete;

    std::vector<double> solve(const std::vector<double>& rhs) const;
    int dimension() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

inline Factorization factorize(const SparseMatrix& matrix) { return Factorization(matrix); }

struct SaddleSolution {
    std::vector<double> velocity;
    std::vector<double> pressure;
    double multiplier = 0.0;
};

/// Solves [A, B^T; B, 0] with the pressure mean constraint
/// sum_c p_c * mean_weights_c = 0 enforced through a Lagrange multiplier.
SaddleSolution saddle_solve(const SparseMatrix& A, const SparseMatrix& B,
                            const std::vector<double>& f, const std::vector<double>& g,
                            const std::vector<double>& mean_weights);

/// Splits an augmented saddle solution vector back into its blocks.
SaddleSolution split_saddle_solution(const std::vector<double>& z, int n_velocity, int n_pressure);

}  // namespace ns2g
