#pragma once

#include <tuple>
#include <vector>

namespace ns2g {

/// Compressed sparse row matrix. Column indices are sorted and unique
/// within each row; row offsets are monotone.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> row_offsets;  // size rows + 1
    std::vector<int> col_indices;
    std::vector<double> values;

    static SparseMatrix from_triplets(int rows, int cols,
                                      const std::vector<std::tuple<int, int, double>>& triplets);
    /// Builds a zero-valued matrix from per-row column sets (need not be sorted).
    static SparseMatrix from_pattern(int rows, int cols,
                                     const std::vector<std::vector<int>>& row_columns);

    int nnz() const { return int(col_indices.size()); }
    void set_zero();
    /// Adds v at (r, c); the entry must be in the pattern.
    void add(int r, int c, double v);
    double coeff(int r, int c) const;  // 0 if not stored

    std::vector<double> apply(const std::vector<double>& x) const;
    SparseMatrix transposed() const;
    bool same_pattern(const SparseMatrix& other) const;
    /// values += alpha * other.values; patterns must be identical.
    void add_scaled(double alpha, const SparseMatrix& other);
};

/// Assembles the augmented saddle-point matrix
///   [ A   B^T  0 ]
///   [ B   0    w ]
///   [ 0   w^T  0 ]
/// where w carries the pressure mean-constraint weights (cell areas).
SparseMatrix build_saddle_matrix(const SparseMatrix& A, const SparseMatrix& B,
                                 const std::vector<double>& mean_weights);

}  // namespace ns2g
