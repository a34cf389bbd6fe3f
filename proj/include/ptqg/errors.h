// Copyright 2026 The ptqg Authors
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

#ifndef PTQG_ERRORS_H
#define PTQG_ERRORS_H

#include <stdexcept>
#include <string>

namespace ptqg {

/// A circuit violates one of its structural invariants. `event_index` names
/// the offending event (or SIZE_MAX when the problem is not tied to one).
class CircuitError : public std::invalid_argument {
   public:
    CircuitError(const std::string &what, size_t event_index)
        : std::invalid_argument(what), event_index(event_index) {
    }
    size_t event_index;
};

/// A computation would need more memory, qubits or iterations than allowed.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A value left the representable range. The log10 of the value is kept so
/// callers can still report its order of magnitude.
class RangeError : public std::range_error {
   public:
    RangeError(const std::string &what, double log10_value)
        : std::range_error(what), log10_value(log10_value) {
    }
    double log10_value;
};

/// No error rate in the search bracket reaches the requested target.
class InfeasibleThreshold : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace ptqg

#endif
