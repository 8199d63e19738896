#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bilconv/matrix.hpp"

namespace bilconv {

/// Dense order-d tensor, row-major (last index fastest).
template <typename T>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> dims)
        : dims_(std::move(dims)), data_(total(dims_), T(0)) {}
    Tensor(std::vector<std::size_t> dims, std::vector<T> data)
        : dims_(std::move(dims)), data_(std::move(data)) {
        if (data_.size() != total(dims_))
            throw std::invalid_argument("tensor entry count does not match dims");
    }

    std::size_t order() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t size() const { return data_.size(); }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    T& at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
    const T& at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }

    bool cubical() const {
        for (std::size_t d : dims_)
            if (d != dims_[0]) return false;
        return true;
    }

private:
    static std::size_t total(const std::vector<std::size_t>& dims) {
        return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                               std::multiplies<>());
    }
    std::size_t offset(const std::vector<std::size_t>& idx) const {
        std::size_t off = 0;
        for (std::size_t k = 0; k < dims_.size(); ++k) off = off * dims_[k] + idx[k];
        return off;
    }

    std::vector<std::size_t> dims_;
    std::vector<T> data_;
};

/// Contract matrix m against the given mode: out[..., i, ...] = sum_j m(i,j) in[..., j, ...].
template <typename T>
Tensor<T> mode_apply(const Matrix<T>& m, const Tensor<T>& t, std::size_t mode) {
    const auto& dims = t.dims();
    if (mode >= dims.size() || m.cols() != dims[mode])
        throw std::invalid_argument("mode_apply shape mismatch");
    std::vector<std::size_t> out_dims = dims;
    out_dims[mode] = m.rows();
    Tensor<T> out(out_dims);

    std::size_t inner = 1;
    for (std::size_t k = mode + 1; k < dims.size(); ++k) inner *= dims[k];
    std::size_t outer = t.size() / (inner * dims[mode]);

    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const T& mij = m(i, j);
                if (scalar_is_zero(mij)) continue;
                const T* src = t.data().data() + (o * dims[mode] + j) * inner;
                T* dst = out.data().data() + (o * m.rows() + i) * inner;
                for (std::size_t x = 0; x < inner; ++x) dst[x] += mij * src[x];
            }
    return out;
}

}  // namespace bilconv
