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

#pragma once

#include <utility>
#include <vector>

namespace loglaw::estimators {

/// Weighted least-squares line y = slope x + intercept.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double r_squared = 0.0;
    std::size_t points = 0;
};

/*!
 * Weighted least squares on (x, y) points; callers pass logarithms.
 *
 * An empty weight vector means unit weights. The slope standard error uses
 * the weighted residual variance with n - 2 degrees of freedom. Throws
 * InsufficientData with fewer than 3 points or when all x coincide.
 */
LineFit loglog_fit(const std::vector<std::pair<double, double>>& points, const std::vector<double>& weights = {});

/// Median of finite-or-infinite values; the mean of the middle pair for even sizes.
double median(std::vector<double> values);

} // namespace loglaw::estimators
