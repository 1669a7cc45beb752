// Copyright 2026 The jordangeo Authors.
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

#ifndef JORDANGEO_ERRORS_HPP_
#define JORDANGEO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace jordangeo {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input polygon has crossing or touching non-adjacent edges.
class SimplicityViolation : public Error {
 public:
  SimplicityViolation(const std::string& what, int edge_a, int edge_b)
      : Error(what), edge_a(edge_a), edge_b(edge_b) {}
  int edge_a;
  int edge_b;
};

// Fewer than 3 distinct vertices survive normalization, or input is unusable.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class PointOutsideDomain : public Error {
 public:
  using Error::Error;
};

class ArclengthOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidChord : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangle : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jordangeo

#endif  // JORDANGEO_ERRORS_HPP_
