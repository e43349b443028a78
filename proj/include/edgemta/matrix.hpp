#ifndef EDGEMTA_MATRIX_HPP
#define EDGEMTA_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace edgemta {

// Dense row-major matrix. Small and value-semantic; the tables here are at
// most a few thousand entries.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<const T> row(std::size_t r) const {
        return std::span<const T>(data_).subspan(r * cols_, cols_);
    }
    std::span<T> row(std::size_t r) { return std::span<T>(data_).subspan(r * cols_, cols_); }

    const std::vector<T>& data() const noexcept { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

} // namespace edgemta

#endif // EDGEMTA_MATRIX_HPP
