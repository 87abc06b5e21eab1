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

#ifndef LAGMAT_ERROR_HPP_
#define LAGMAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lagmat {

// Base for every error raised by the library. Each precondition failure named
// in the public API has its own subclass so callers can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LAGMAT_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// linalg
LAGMAT_DEFINE_ERROR(NonSquare);
LAGMAT_DEFINE_ERROR(IndexOutOfRange);
LAGMAT_DEFINE_ERROR(NotSkewSymmetric);
LAGMAT_DEFINE_ERROR(DimensionMismatch);

// ground / collections
LAGMAT_DEFINE_ERROR(InvalidCollection);
LAGMAT_DEFINE_ERROR(InvalidOrdering);

// repr
LAGMAT_DEFINE_ERROR(KindMismatch);
LAGMAT_DEFINE_ERROR(NotIsotropic);
LAGMAT_DEFINE_ERROR(RankDeficient);
LAGMAT_DEFINE_ERROR(InvalidRepresentation);

// axioms
LAGMAT_DEFINE_ERROR(NotLagrangian);
LAGMAT_DEFINE_ERROR(OddSupport);

// pairs
LAGMAT_DEFINE_ERROR(NotOrthogonalMatroid);
LAGMAT_DEFINE_ERROR(NotAPair);
LAGMAT_DEFINE_ERROR(NotCompletable);
LAGMAT_DEFINE_ERROR(DegeneratePair);

// orient
LAGMAT_DEFINE_ERROR(BasisNotInMatroid);
LAGMAT_DEFINE_ERROR(NotReducible);
LAGMAT_DEFINE_ERROR(NoBasis);
LAGMAT_DEFINE_ERROR(MissingRequiredBases);

#undef LAGMAT_DEFINE_ERROR

// Raised by the text readers; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lagmat

#endif  // LAGMAT_ERROR_HPP_
