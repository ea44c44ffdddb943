// Copyright 2026 The Authors.
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

#ifndef SFORGE_RATIONAL_HPP_
#define SFORGE_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sforge {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

/// Parses "p/q", "p" or "-p/q". Whitespace is not allowed.
Rational parse_rational(std::string_view text);

/// Formats as "p/q"; integers keep their "/1".
std::string to_string(const Rational& r);

}  // namespace sforge

#endif  // SFORGE_RATIONAL_HPP_
