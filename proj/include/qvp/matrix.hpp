#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qvp {

using PointId = std::size_t;

/// Dense row-major n x n matrix. Entry (i, j) is read "from i to j".
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    SquareMatrix transposed() const {
        SquareMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// Boolean relation matrix; uint8_t avoids the std::vector<bool> proxy.
using Relation = SquareMatrix<std::uint8_t>;

}  // namespace qvp
