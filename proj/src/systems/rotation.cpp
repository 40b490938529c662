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

#include "loglaw/systems/rotation.hpp"

#include <cmath>

#include "loglaw/core/error.hpp"
#include "loglaw/systems/fixed_point.hpp"

namespace loglaw::systems {

CirclePoint CirclePoint::from_double(double x) noexcept
{
    return {to_fixed(x)};
}

std::string to_string(ArithmeticClass c)
{
    switch (c) {
    case ArithmeticClass::golden:
        return "golden";
    case ArithmeticClass::liouville:
        return "liouville";
    case ArithmeticClass::custom:
        break;
    }
    return "custom";
}

std::vector<Convergent> convergents(const std::vector<std::int64_t>& partial_quotients, std::int64_t q_limit)
{
    std::vector<Convergent> out;
    __int128 p_prev = 1, q_prev = 0;
    __int128 p = 0, q = 1;
    for (std::int64_t a : partial_quotients) {
        if (a <= 0)
            throw InvalidArgument("partial quotients must be positive");
        const __int128 p_next = a * p + p_prev;
        const __int128 q_next = a * q + q_prev;
        if (q_next > q_limit)
            break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        out.push_back({static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)});
    }
    return out;
}

std::vector<std::int64_t> partial_quotients(double x, int depth)
{
    if (!(x > 0.0 && x < 1.0))
        throw InvalidArgument("partial_quotients: x must lie in (0, 1)");
    std::vector<std::int64_t> out;
    for (int k = 0; k < depth && x > 1e-15; ++k) {
        const double inv = 1.0 / x;
        const double a = std::floor(inv);
        if (a > 9e15)
            break;
        out.push_back(static_cast<std::int64_t>(a));
        x = inv - a;
    }
    return out;
}

RotationSpec RotationSpec::golden()
{
    RotationSpec s;
    s.arithmetic_class = ArithmeticClass::golden;
    s.alpha_fixed = 0x9E3779B97F4A7C15ull;
    s.alpha = from_fixed(s.alpha_fixed);
    s.partial_quotients.assign(40, 1);
    for (const Convergent& c : convergents(s.partial_quotients, 1000000000000ll))
        s.denominators.push_back(c.q);
    return s;
}

RotationSpec RotationSpec::liouville(double q_limit)
{
    if (!(q_limit >= 1.0) || q_limit > 1e15)
        throw InvalidArgument("Liouville rotation: q_limit must lie in [1, 1e15]");
    RotationSpec s;
    s.arithmetic_class = ArithmeticClass::liouville;
    const auto limit = static_cast<std::int64_t>(q_limit);
    std::vector<std::int64_t> schedule;
    for (std::int64_t k = 1; k <= 12; ++k) {
        std::int64_t a = 1;
        for (std::int64_t i = 0; i < k; ++i)
            a *= k;
        schedule.push_back(a);
    }
    std::vector<Convergent> conv = convergents(schedule, std::int64_t{1} << 62);
    std::size_t keep = 0;
    while (keep < conv.size() && conv[keep].q <= limit)
        ++keep;
    if (keep == conv.size())
        throw InvalidArgument("Liouville rotation: q_limit beyond the representable schedule");
    conv.resize(keep + 1);
    s.partial_quotients.assign(schedule.begin(), schedule.begin() + static_cast<std::ptrdiff_t>(conv.size()));
    for (const Convergent& c : conv)
        s.denominators.push_back(c.q);
    const Convergent last = conv.back();
    const unsigned __int128 scaled = (static_cast<unsigned __int128>(last.p) << 64) / static_cast<unsigned __int128>(last.q);
    s.alpha_fixed = static_cast<std::uint64_t>(scaled);
    s.alpha = static_cast<double>(last.p) / static_cast<double>(last.q);
    return s;
}

RotationSpec RotationSpec::custom(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidArgument("rotation angle must lie in (0, 1)");
    RotationSpec s;
    s.arithmetic_class = ArithmeticClass::custom;
    s.alpha_fixed = to_fixed(alpha);
    s.alpha = alpha;
    s.partial_quotients = systems::partial_quotients(alpha, 40);
    for (const Convergent& c : convergents(s.partial_quotients, 1000000000000ll))
        s.denominators.push_back(c.q);
    return s;
}

CirclePoint map_step(const RotationSpec& spec, CirclePoint p) noexcept
{
    return {p.x + spec.alpha_fixed};
}

CirclePoint rotation_power(const RotationSpec& spec, CirclePoint p, std::uint64_t n) noexcept
{
    return {p.x + n * spec.alpha_fixed};
}

} // namespace loglaw::systems
