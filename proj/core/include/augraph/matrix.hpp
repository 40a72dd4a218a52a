#pragma once
// Minimal dense row-major matrix. The toolkit's numerics (Jacobi sweeps,
// probe training, cosine kernels) work on raw rows, so this stays a plain
// value type with no linear-algebra dependency.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace augraph {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m;
        for (const auto& r : rows) {
            if (m.rows_ == 0) m.cols_ = r.size();
            if (r.size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            m.data_.insert(m.data_.end(), r.begin(), r.end());
            ++m.rows_;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace augraph
