// Copyright 2026 The LAQCC Authors
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

#ifndef LAQCC_ERROR_HPP_
#define LAQCC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace laqcc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LAQCC_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

LAQCC_DEFINE_ERROR(ValidationError);
LAQCC_DEFINE_ERROR(IndexError);
LAQCC_DEFINE_ERROR(InfeasibleBranchError);
LAQCC_DEFINE_ERROR(DimensionError);
LAQCC_DEFINE_ERROR(MalformedProgramError);
LAQCC_DEFINE_ERROR(ShapeError);
LAQCC_DEFINE_ERROR(RangeError);
LAQCC_DEFINE_ERROR(NonCommutingError);
LAQCC_DEFINE_ERROR(PolicyError);
LAQCC_DEFINE_ERROR(RegisterOverlapError);
LAQCC_DEFINE_ERROR(LayoutError);
LAQCC_DEFINE_ERROR(PlanMismatchError);

#undef LAQCC_DEFINE_ERROR

}  // namespace laqcc

#endif  // LAQCC_ERROR_HPP_
