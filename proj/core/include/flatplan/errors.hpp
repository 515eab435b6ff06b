/*
 Copyright 2026 The flatplan Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef FLATPLAN_ERRORS_HPP
#define FLATPLAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flatplan {

/// Invalid parameters, malformed configuration, or inconsistent inputs.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The boundary-value system is too ill-conditioned to trust, typically a
/// sign of degenerate cost weighting.
class ConditioningError : public std::runtime_error {
 public:
  explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

/// The simulated state stopped being finite.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double first_bad_time)
      : std::runtime_error(what), first_bad_time(first_bad_time) {}

  double first_bad_time;
};

}  // namespace flatplan

#endif  // FLATPLAN_ERRORS_HPP
