// One PASS/FAIL line per acceptance criterion; failures are listed below
// their line. Exit status is 0 only when every criterion passes.

#include "suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2024;
  int failed = 0, index = 0;
  for (const auto& s : mackey::suites::all()) {
    mackey::suites::Outcome out = mackey::suites::run(s, seed);
    ++index;
    std::printf("%s AC%-2d %-17s %4zu cases %7zu checks %8.2f s  %s\n", out.report.ok() ? "PASS" : "FAIL", index, out.name.c_str(),
                out.cases, out.report.checks, out.seconds, out.title.c_str());
    if (!out.report.ok()) {
      ++failed;
      std::size_t shown = 0;
      for (const auto& f : out.report.failures) {
        if (++shown > 20) break;
        std::printf("      %s\n", f.c_str());
      }
    }
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
