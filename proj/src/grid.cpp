#include "adistab/grid.hpp"

#include "adistab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace adistab {

GridSpec::GridSpec(std::vector<std::size_t> points) : m_(std::move(points))
{
    if (m_.empty())
        throw StructuralError("grid needs at least one direction");
    stride_.resize(m_.size());
    for (std::size_t d = 0; d < m_.size(); ++d) {
        if (m_[d] < 3)
            throw StructuralError("grid direction " + std::to_string(d + 1) +
                                  " needs at least 3 points");
        stride_[d] = size_;
        size_ *= m_[d];
    }
}

GridSpec GridSpec::uniform(std::size_t k, std::size_t m)
{
    return GridSpec(std::vector<std::size_t>(k, m));
}

void GridSpec::multi_index(std::size_t flat, std::span<std::size_t> out) const
{
    for (std::size_t d = 0; d < m_.size(); ++d) {
        out[d] = flat % m_[d];
        flat /= m_[d];
    }
}

void GridSpec::coordinates(std::size_t flat, std::span<double> out) const
{
    for (std::size_t d = 0; d < m_.size(); ++d) {
        out[d] = static_cast<double>(flat % m_[d]) * spacing(d);
        flat /= m_[d];
    }
}

bool all_finite(std::span<const double> u) noexcept
{
    return std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v); });
}

} // namespace adistab
