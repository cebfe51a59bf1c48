#include "ns2g/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ns2g {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         const std::vector<std::tuple<int, int, double>>& triplets) {
    std::vector<std::vector<std::pair<int, double>>> per_row(rows);
    for (const auto& [r, c, v] : triplets) per_row[r].push_back({c, v});

    SparseMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.row_offsets.assign(rows + 1, 0);
    for (int r = 0; r < rows; ++r) {
        auto& row = per_row[r];
        std::sort(row.begin(), row.end());
        // merge duplicates
        int out = 0;
        for (int k = 0; k < int(row.size()); ++k) {
            if (out > 0 && row[out - 1].first == row[k].first)
                row[out - 1].second += row[k].second;
            else
                row[out++] = row[k];
        }
        row.resize(out);
        for (const auto& [c, v] : row) {
            m.col_indices.push_back(c);
            m.values.push_back(v);
        }
        m.row_offsets[r + 1] = int(m.col_indices.size());
    }
    return m;
}

SparseMatrix SparseMatrix::from_pattern(int rows, int cols,
                                        const std::vector<std::vector<int>>& row_columns) {
    SparseMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.row_offsets.assign(rows + 1, 0);
    for (int r = 0; r < rows; ++r) {
        std::vector<int> cs = row_columns[r];
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        m.col_indices.insert(m.col_indices.end(), cs.begin(), cs.end());
        m.row_offsets[r + 1] = int(m.col_indices.size());
    }
    m.values.assign(m.col_indices.size(), 0.0);
    return m;
}

void SparseMatrix::set_zero() { std::fill(values.begin(), values.end(), 0.0); }

void SparseMatrix::add(int r, int c, double v) {
    const auto begin = col_indices.begin() + row_offsets[r];
    const auto end = col_indices.begin() + row_offsets[r + 1];
    const auto it = std::lower_bound(begin, end, c);
    if (it == end || *it != c) throw std::logic_error("entry not in sparsity pattern");
    values[it - col_indices.begin()] += v;
}

double SparseMatrix::coeff(int r, int c) const {
    const auto begin = col_indices.begin() + row_offsets[r];
    const auto end = col_indices.begin() + row_offsets[r + 1];
    const auto it = std::lower_bound(begin, end, c);
    if (it == end || *it != c) return 0.0;
    return values[it - col_indices.begin()];
}

std::vector<double> SparseMatrix::apply(const std::vector<double>& x) const {
    assert(int(x.size()) == cols);
    std::vector<double> y(rows, 0.0);
    for (int r = 0; r < rows; ++r) {
        double s = 0.0;
        for (int k = row_offsets[r]; k < row_offsets[r + 1]; ++k)
            s += values[k] * x[col_indices[k]];
        y[r] = s;
    }
    return y;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.row_offsets.assign(cols + 1, 0);
    for (int c : col_indices) ++t.row_offsets[c + 1];
    for (int r = 0; r < cols; ++r) t.row_offsets[r + 1] += t.row_offsets[r];
    t.col_indices.resize(col_indices.size());
    t.values.resize(values.size());
    std::vector<int> next(t.row_offsets.begin(), t.row_offsets.end() - 1);
    for (int r = 0; r < rows; ++r) {
        for (int k = row_offsets[r]; k < row_offsets[r + 1]; ++k) {
            const int pos = next[col_indices[k]]++;
            t.col_indices[pos] = r;
            t.values[pos] = values[k];
        }
    }
    return t;
}

bool SparseMatrix::same_pattern(const SparseMatrix& other) const {
    return rows == other.rows && cols == other.cols && row_offsets == other.row_offsets &&
           col_indices == other.col_indices;
}

void SparseMatrix::add_scaled(double alpha, const SparseMatrix& other) {
    if (!same_pattern(other)) throw std::logic_error("pattern mismatch in add_scaled");
    for (size_t k = 0; k < values.size(); ++k) values[k] += alpha * other.values[k];
}

SparseMatrix build_saddle_matrix(const SparseMatrix& A, const SparseMatrix& B,
                                 const std::vector<double>& mean_weights) {
    const int nu = A.rows;
    const int np = B.rows;
    assert(A.cols == nu && B.cols == nu && int(mean_weights.size()) == np);
    const SparseMatrix Bt = B.transposed();

    SparseMatrix k;
    k.rows = k.cols = nu + np + 1;
    k.row_offsets.assign(k.rows + 1, 0);
    k.col_indices.reserve(A.nnz() + 2 * B.nnz() + 2 * np);
    k.values.reserve(A.nnz() + 2 * B.nnz() + 2 * np);

    for (int r = 0; r < nu; ++r) {
        for (int i = A.row_offsets[r]; i < A.row_offsets[r + 1]; ++i) {
            k.col_indices.push_back(A.col_indices[i]);
            k.values.push_back(A.values[i]);
        }
        for (int i = Bt.row_offsets[r]; i < Bt.row_offsets[r + 1]; ++i) {
            k.col_indices.push_back(nu + Bt.col_indices[i]);
            k.values.push_back(Bt.values[i]);
        }
        k.row_offsets[r + 1] = int(k.col_indices.size());
    }
    for (int r = 0; r < np; ++r) {
        for (int i = B.row_offsets[r]; i < B.row_offsets[r + 1]; ++i) {
            k.col_indices.push_back(B.col_indices[i]);
            k.values.push_back(B.values[i]);
        }
        k.col_indices.push_back(nu + np);
        k.values.push_back(mean_weights[r]);
        k.row_offsets[nu + r + 1] = int(k.col_indices.size());
    }
    for (int c = 0; c < np; ++c) {
        k.col_indices.push_back(nu + c);
        k.values.push_back(mean_weights[c]);
    }
    k.row_offsets[nu + np + 1] = int(k.col_indices.size());
    return k;
}

}  // namespace ns2g
