// Copyright 2026 The QSS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSS_CAPS_HPP
#define QSS_CAPS_HPP

#include <cstdint>

namespace qss {

/// Hard resource caps for dense simulation.  Operations that would exceed
/// them fail loudly with SizeCapError instead of thrashing.  The QSS_MAX_DIM
/// environment variable (read by apply_env_caps) overrides both caps.
struct SimCaps {
    static std::int64_t max_state_dim();    // default 2^14
    static std::int64_t max_density_dim();  // default 2^12

    static void set_max_state_dim(std::int64_t dim);
    static void set_max_density_dim(std::int64_t dim);
    static void reset();

    /// Applies QSS_MAX_DIM if set; returns true when an override happened.
    static bool apply_env_caps();
};

void check_state_dim(std::int64_t dim, const char* what);
void check_density_dim(std::int64_t dim, const char* what);

}  // namespace qss

#endif
