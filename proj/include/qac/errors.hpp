// Copyright 2026 The qac Authors
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

#include <stdexcept>
#include <string>

namespace qac {

/// Malformed arguments: wrong dimensions, non-normalized states, bad indices.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Linearly dependent vectors where independence was required.
struct RankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No linear map with the requested properties exists (e.g. Gram mismatch).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A constructed object violates its structural invariants.
struct ValidityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qac
