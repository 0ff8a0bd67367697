#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace supportlab {

// Dense row-major array of doubles. Rank is small (≤ 4) everywhere in this
// project: [N, C, H, W] images, [N, F] feature rows, [F] vectors.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape, double fill = 0.0);
    Tensor(std::vector<int> shape, std::vector<double> values);

    const std::vector<int>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int dim(int i) const { return shape_.at(static_cast<std::size_t>(i)); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }
    std::vector<double>& storage() { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    // Size of one leading-dimension slice (product of all dims but the first).
    std::size_t row_size() const;

    void fill(double v);
    void reshape(std::vector<int> shape);

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool operator==(const Tensor& other) const = default;

    std::string shape_string() const;

private:
    std::vector<int> shape_;
    std::vector<double> data_;
};

std::size_t element_count(const std::vector<int>& shape);

}  // namespace supportlab
