#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace adistab {

/// Grid values flattened with the first direction varying fastest.
using Field = std::vector<double>;

/// Periodic uniform grid on the unit hypercube: m_j points per direction,
/// mesh width 1/m_j, node l_j at x_j = l_j / m_j.
class GridSpec
{
public:
    explicit GridSpec(std::vector<std::size_t> points);
    static GridSpec uniform(std::size_t k, std::size_t m);

    std::size_t dim() const noexcept { return m_.size(); }
    std::size_t points(std::size_t dir) const { return m_[dir]; }
    const std::vector<std::size_t>& points() const noexcept { return m_; }
    double spacing(std::size_t dir) const { return 1.0 / static_cast<double>(m_[dir]); }
    std::size_t stride(std::size_t dir) const { return stride_[dir]; }
    std::size_t size() const noexcept { return size_; }

    /// Multi-index of a flat position.
    void multi_index(std::size_t flat, std::span<std::size_t> out) const;
    /// Node coordinates of a flat position.
    void coordinates(std::size_t flat, std::span<double> out) const;

    bool operator==(const GridSpec& o) const noexcept { return m_ == o.m_; }

private:
    std::vector<std::size_t> m_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 1;
};

/// True iff every entry is finite.
bool all_finite(std::span<const double> u) noexcept;

} // namespace adistab
