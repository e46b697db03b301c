// Copyright 2026 The wdd authors
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

namespace wdd {

// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input relation has a directed cycle.
class CycleDetected : public Error {
 public:
  using Error::Error;
};

// An edge (v, v) was given.
class SelfLoop : public Error {
 public:
  using Error::Error;
};

// An edge-list line does not hold exactly two vertex tokens.
class MalformedLine : public Error {
 public:
  MalformedLine(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A permutation is not a valid topological sorting of the graph at hand.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

// Unsupported output format name.
class UnknownFormat : public Error {
 public:
  using Error::Error;
};

// Malformed generator spec string.
class BadSpec : public Error {
 public:
  using Error::Error;
};

// A complete extension set was required but the given one was truncated.
class TruncatedInput : public Error {
 public:
  using Error::Error;
};

// The number of linear extensions exceeds the enumeration cap.
class ExtensionCapExceeded : public Error {
 public:
  using Error::Error;
};

// The downset-lattice state count exceeds the cap.
class StateCapExceeded : public Error {
 public:
  using Error::Error;
};

// An extension count does not fit in 64 bits.
class CountOverflow : public Error {
 public:
  using Error::Error;
};

// The poset dimension exceeds the search bound; carries the best lower
// bound established before giving up.
class DimExceedsMax : public Error {
 public:
  DimExceedsMax(int lower_bound, const std::string& what)
      : Error(what), lower_bound_(lower_bound) {}
  int lower_bound() const { return lower_bound_; }

 private:
  int lower_bound_;
};

// A node index is outside the graph.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Bound verification was asked for a report without an exact dimension.
class MissingDim : public Error {
 public:
  using Error::Error;
};

}  // namespace wdd
