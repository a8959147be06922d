#pragma once

#include <vector>

namespace cci {

// Natural cubic spline through (x[i], y[i]) with strictly increasing x.
// Throws std::invalid_argument for fewer than 3 points or non-increasing x.
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;

    // x locations of interior local maxima of the piecewise cubic, found per
    // segment from the derivative's roots; excludes the bracket endpoints.
    std::vector<double> interior_maxima() const;

private:
    std::vector<double> x_, y_;
    std::vector<double> m_; // second derivatives at the knots
};

} // namespace cci
