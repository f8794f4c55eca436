/*
 * Copyright 2026 The pfgames Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pfg {

// Violated precondition on a domain object (bad player, non-block target, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Player set larger than the configured universe bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A probability that must be strictly positive is zero.
class PositivityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed input file or family or operator string.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pfg
