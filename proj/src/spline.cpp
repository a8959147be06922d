#include "cci/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cci {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n)
        throw std::invalid_argument("CubicSpline: need >= 3 points with matching y");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("CubicSpline: x must be strictly increasing");

    // Natural boundary: zero curvature at both ends; Thomas solve for the
    // interior second derivatives.
    m_.assign(n, 0.0);
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double w = h0 / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
        if (i == 1) break;
    }
}

double CubicSpline::operator()(double x) const {
    const std::size_t n = x_.size();
    std::size_t i = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
    if (i == 0) i = 1;
    if (i >= n) i = n - 1;
    --i; // segment [x_i, x_{i+1}]

    const double h = x_[i + 1] - x_[i];
    const double t = x - x_[i];
    const double b = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    const double c = m_[i] / 2.0;
    const double d = (m_[i + 1] - m_[i]) / (6.0 * h);
    return y_[i] + t * (b + t * (c + t * d));
}

std::vector<double> CubicSpline::interior_maxima() const {
    const std::size_t n = x_.size();
    std::vector<double> out;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = x_[i + 1] - x_[i];
        const double b = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
        const double c = m_[i] / 2.0;
        const double d = (m_[i + 1] - m_[i]) / (6.0 * h);

        // S'(t) = b + 2c t + 3d t^2 on t in [0, h]; keep roots with S'' < 0.
        std::vector<double> roots;
        if (std::abs(d) < 1e-300) {
            if (std::abs(c) > 0.0) roots.push_back(-b / (2.0 * c));
        } else {
            const double disc = 4.0 * c * c - 12.0 * d * b;
            if (disc >= 0.0) {
                const double s = std::sqrt(disc);
                roots.push_back((-2.0 * c + s) / (6.0 * d));
                roots.push_back((-2.0 * c - s) / (6.0 * d));
            }
        }
        for (double t : roots) {
            if (!(t > 0.0 && t < h)) continue;
            if (2.0 * c + 6.0 * d * t < 0.0) out.push_back(x_[i] + t);
        }
    }

    std::sort(out.begin(), out.end());
    // Drop near-duplicates and anything touching the bracket ends.
    std::vector<double> dedup;
    const double span = x_.back() - x_.front();
    for (double v : out) {
        if (v <= x_.front() || v >= x_.back()) continue;
        if (!dedup.empty() && std::abs(v - dedup.back()) < 1e-12 * span) continue;
        dedup.push_back(v);
    }
    // The accounting contract allows at most k-2 candidate maxima per level.
    if (dedup.size() > n - 2) dedup.resize(n - 2);
    return dedup;
}

} // namespace cci
