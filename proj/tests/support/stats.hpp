// Copyright 2026 The hepgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "hepgrover/sampling.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cstddef>
#include <vector>

namespace hepgrover::testing {

struct ChiSquare {
    double statistic{0.0};
    double dof{0.0};
    double p_value{1.0};
};

// Pearson goodness of fit; cells with zero expected mass must be empty.
inline ChiSquare chi_square(const Histogram &counts,
                            const std::vector<double> &probs) {
    const double shots = static_cast<double>(total_shots(counts));
    ChiSquare out;
    std::size_t cells = 0;
    for (std::size_t s = 0; s < probs.size(); ++s) {
        const auto it = counts.find(s);
        const double observed = it == counts.end() ? 0.0 : double(it->second);
        if (probs[s] <= 0.0) {
            if (observed > 0.0) {
                out.p_value = 0.0;
                return out;
            }
            continue;
        }
        const double expected = shots * probs[s];
        out.statistic += (observed - expected) * (observed - expected) / expected;
        ++cells;
    }
    out.dof = double(cells) - 1.0;
    if (out.dof < 1.0) {
        return out;
    }
    const boost::math::chi_squared dist(out.dof);
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
    return out;
}

} // namespace hepgrover::testing
