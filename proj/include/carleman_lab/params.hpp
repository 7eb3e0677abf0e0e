// Copyright 2026 the carleman-lab authors
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

#ifndef CARLEMAN_LAB_PARAMS_HPP
#define CARLEMAN_LAB_PARAMS_HPP

#include <stdexcept>

namespace carleman {

/// Order s of the fractional operator and boundary dimension n.
/// The degenerate weight attached to all bulk measures is y2^{1-2s};
/// for s in (0,1) the exponent 1-2s lies in (-1,1), so the weight is
/// locally integrable near y2 = 0.
struct FractionalParams {
    double s = 0.5;
    int n = 1;

    FractionalParams() = default;
    FractionalParams(double s_, int n_ = 1) : s(s_), n(n_) { validate(); }

    void validate() const {
        if (!(s > 0.0 && s < 1.0))
            throw std::invalid_argument("FractionalParams: s must lie in (0,1)");
        if (n < 1)
            throw std::invalid_argument("FractionalParams: n must be a positive integer");
    }

    /// Exponent of the degenerate weight y2^{1-2s}.
    double weight_exponent() const { return 1.0 - 2.0 * s; }
};

} // namespace carleman

#endif
