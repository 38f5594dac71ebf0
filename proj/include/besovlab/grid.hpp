#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace besovlab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Equispaced nodes x_i = 2*pi*i/N on [0, 2*pi). N is a power of two (the
// transform requires it; odd N is unsupported).
class Grid1D {
  public:
    explicit Grid1D(int n) : n_(n) {
        if (n < 4 || !is_power_of_two(n))
            throw std::domain_error("Grid1D: N must be a power of two >= 4, got " +
                                    std::to_string(n));
    }

    int size() const { return n_; }
    double node(int i) const { return kTwoPi * static_cast<double>(i) / static_cast<double>(n_); }

  private:
    int n_;
};

// Real samples on a Grid1D.
class Field1D {
  public:
    Field1D(const Grid1D& grid, std::vector<double> samples)
        : grid_(grid), samples_(std::move(samples)) {
        if (static_cast<int>(samples_.size()) != grid_.size())
            throw std::domain_error("Field1D: sample count does not match grid size");
    }

    explicit Field1D(const Grid1D& grid) : grid_(grid), samples_(grid.size(), 0.0) {}

    const Grid1D& grid() const { return grid_; }
    int size() const { return grid_.size(); }
    double operator[](int i) const { return samples_[static_cast<size_t>(i)]; }
    double& operator[](int i) { return samples_[static_cast<size_t>(i)]; }
    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }

  private:
    Grid1D grid_;
    std::vector<double> samples_;
};

}  // namespace besovlab
