#pragma once
#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <vector>

namespace tanlift {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

namespace detail {
inline double vec_max_abs(const std::vector<double>& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}
}  // namespace detail

// Small dense tensors of rank 3..5 over a single axis length n.
// All contractions in this library are written as explicit index loops;
// these types only provide storage and bounds-consistent addressing.

class Ten3 {
public:
    Ten3() = default;
    explicit Ten3(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n, 0.0) {}
    int dim() const { return n_; }
    double& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
    double operator()(int i, int j, int k) const { return a_[idx(i, j, k)]; }
    double max_abs() const { return detail::vec_max_abs(a_); }

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }
    int n_ = 0;
    std::vector<double> a_;
};

class Ten4 {
public:
    Ten4() = default;
    explicit Ten4(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}
    int dim() const { return n_; }
    double& operator()(int i, int j, int k, int l) { return a_[idx(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return a_[idx(i, j, k, l)]; }
    double max_abs() const { return detail::vec_max_abs(a_); }

private:
    std::size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
    }
    int n_ = 0;
    std::vector<double> a_;
};

class Ten5 {
public:
    Ten5() = default;
    explicit Ten5(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n * n * n, 0.0) {}
    int dim() const { return n_; }
    double& operator()(int i, int j, int k, int l, int m) { return a_[idx(i, j, k, l, m)]; }
    double operator()(int i, int j, int k, int l, int m) const { return a_[idx(i, j, k, l, m)]; }
    double max_abs() const { return detail::vec_max_abs(a_); }

private:
    std::size_t idx(int i, int j, int k, int l, int m) const {
        return (((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l) * n_ + m;
    }
    int n_ = 0;
    std::vector<double> a_;
};

}  // namespace tanlift
