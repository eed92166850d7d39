#pragma once

#include "physlab/core/error.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace physlab {

// Dense row-major float32 tensor, rank 1..5, last axis fastest.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int64_t> shape, float fill = 0.0f) : shape_(std::move(shape)) {
        if (shape_.empty() || shape_.size() > 5)
            throw ConfigError("tensor rank must be 1..5, got " + std::to_string(shape_.size()));
        int64_t n = 1;
        for (int64_t d : shape_) {
            if (d < 1) throw ConfigError("tensor axis size must be >= 1");
            n *= d;
        }
        data_.assign(static_cast<size_t>(n), fill);
    }

    static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

    int rank() const { return static_cast<int>(shape_.size()); }
    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }

    float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    int64_t offset(int64_t a, int64_t b) const { return a * shape_[1] + b; }
    int64_t offset(int64_t a, int64_t b, int64_t c) const {
        return (a * shape_[1] + b) * shape_[2] + c;
    }
    int64_t offset(int64_t a, int64_t b, int64_t c, int64_t d) const {
        return ((a * shape_[1] + b) * shape_[2] + c) * shape_[3] + d;
    }
    int64_t offset(int64_t a, int64_t b, int64_t c, int64_t d, int64_t e) const {
        return (((a * shape_[1] + b) * shape_[2] + c) * shape_[3] + d) * shape_[4] + e;
    }

    template <typename... Ix>
    float& at(Ix... ix) {
        return data_[static_cast<size_t>(offset(ix...))];
    }
    template <typename... Ix>
    float at(Ix... ix) const {
        return data_[static_cast<size_t>(offset(ix...))];
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    std::string shape_str() const {
        std::string s = "(";
        for (size_t i = 0; i < shape_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(shape_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int64_t> shape_;
    std::vector<float> data_;
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
    if (!a.same_shape(b))
        throw ConfigError(std::string(what) + ": shape mismatch " + a.shape_str() + " vs " +
                          b.shape_str());
}

}  // namespace physlab
