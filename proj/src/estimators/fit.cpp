/*
   Copyright 2026 The loglaw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "loglaw/estimators/fit.hpp"

#include <algorithm>
#include <cmath>

#include "loglaw/core/error.hpp"

namespace loglaw::estimators {

LineFit loglog_fit(const std::vector<std::pair<double, double>>& points, const std::vector<double>& weights)
{
    const std::size_t n = points.size();
    if (n < 3)
        throw InsufficientData("regression needs at least 3 points");
    if (!weights.empty() && weights.size() != n)
        throw InvalidArgument("regression weights must match the points");
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weights.empty() ? 1.0 : weights[i];
        if (!(w > 0.0) || !std::isfinite(points[i].first) || !std::isfinite(points[i].second))
            throw InvalidArgument("regression points and weights must be finite, weights positive");
        sw += w;
        sx += w * points[i].first;
        sy += w * points[i].second;
    }
    const double mx = sx / sw;
    const double my = sy / sw;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weights.empty() ? 1.0 : weights[i];
        const double dx = points[i].first - mx;
        const double dy = points[i].second - my;
        sxx += w * dx * dx;
        sxy += w * dx * dy;
        syy += w * dy * dy;
    }
    if (!(sxx > 1e-300))
        throw InsufficientData("regression x values are degenerate");

    LineFit fit;
    fit.points = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weights.empty() ? 1.0 : weights[i];
        const double e = points[i].second - (fit.intercept + fit.slope * points[i].first);
        rss += w * e * e;
    }
    // normalize weights so the residual variance is on the scale of unit weights
    const double scale = static_cast<double>(n) / sw;
    fit.stderr_slope = std::sqrt(std::max(0.0, rss * scale / static_cast<double>(n - 2)) / (sxx * scale));
    fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - rss / syy) : 1.0;
    return fit;
}

double median(std::vector<double> values)
{
    if (values.empty())
        throw InsufficientData("median of an empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1)
        return values[n / 2];
    const double a = values[n / 2 - 1];
    const double b = values[n / 2];
    if (std::isinf(a) || std::isinf(b))
        return a == b ? a : (std::isinf(b) ? b : a);
    return 0.5 * (a + b);
}

} // namespace loglaw::estimators
