// Copyright 2026 The esd Authors
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

#include "esd/errors.hpp"

#include <limits>

namespace esd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NegativePopulation: return "NegativePopulation";
    case ErrorKind::NotXForm: return "NotXForm";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadDistribution: return "BadDistribution";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::InvalidChannel: return "InvalidChannel";
    case ErrorKind::UnsupportedChannel: return "UnsupportedChannel";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, double magnitude)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      magnitude_(magnitude) {}

Error::Error(ErrorKind kind, const std::string& what)
    : Error(kind, what, std::numeric_limits<double>::quiet_NaN()) {}

}  // namespace esd
