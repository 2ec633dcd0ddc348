/* Copyright 2026 The gsp4 Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Shared q = 3 data for the unit tests; built once per test binary.

#ifndef GSP4_TESTS_FIXTURES_HPP_
#define GSP4_TESTS_FIXTURES_HPP_

#include "gsp4/verify.hpp"

namespace gsp4::testing {

inline const GroupData& q3() {
  static const GroupData d(3);
  return d;
}

inline const TableData& q3_table() {
  static const TableData t(q3());
  return t;
}

}  // namespace gsp4::testing

#endif  // GSP4_TESTS_FIXTURES_HPP_
