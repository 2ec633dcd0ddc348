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

// One PASS/FAIL line per acceptance criterion. Tolerances live in
// gsp4::limits. The core suite runs twice so that criterion 12 compares
// two cold reports byte for byte.

#include <cstdio>
#include <cstring>
#include <string>

#include "gsp4/verify.hpp"

namespace {

void print(const gsp4::VerifyReport& R, const char* suite) {
  for (const auto& c : R.criteria) {
    if (c.id == 12) continue;
    std::printf("%s %2d. %s (%s, q=%lld)\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), suite,
                static_cast<long long>(R.q));
    if (!c.pass)
      for (const auto& l : c.lines)
        if (l.rfind("FAIL", 0) == 0) std::printf("        %s\n", l.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string suite = "core";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--suite") == 0 && i + 1 < argc) suite = argv[++i];
    else {
      std::fprintf(stderr, "usage: acceptance [--suite core|extended]\n");
      return 2;
    }
  }
  if (suite != "core" && suite != "extended") {
    std::fprintf(stderr, "suite must be core or extended\n");
    return 2;
  }
  bool ok = true;
  if (suite == "core") {
    auto first = gsp4::run_verify_suite(gsp4::Suite::core);
    auto second = gsp4::run_verify_suite(gsp4::Suite::core);
    print(first, "core");
    bool same = first.text() == second.text();
    std::printf("%s 12. determinism (core, two cold runs byte-identical, %zu bytes)\n", same ? "PASS" : "FAIL",
                first.text().size());
    ok = first.pass() && second.pass() && same;
  } else {
    auto R = gsp4::run_verify_suite(gsp4::Suite::extended);
    print(R, "extended");
    std::printf("SKIP 12. determinism (defined on the core suite)\n");
    ok = R.pass();
  }
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
  return ok ? 0 : 1;
}
