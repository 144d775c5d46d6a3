// Acceptance runner: one line per criterion, exit 1 on any failure.
// Expected values and tolerances are pinned inside run_certification.
#include <cstdio>
#include <cstring>

#include "hyp5/certify.hpp"

int main(int argc, char** argv) {
  hyp5::CertifyOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--tier") == 0 && i + 1 < argc) {
      opt.long_census = std::strcmp(argv[++i], "long") == 0;
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      opt.threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--tier long|sampled] [--threads N]\n", argv[0]);
      return 2;
    }
  }

  auto results = hyp5::run_certification(opt);
  for (const auto& r : results)
    std::printf("[%s] criterion %2d %-26s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
  bool ok = hyp5::all_passed(results);
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return ok ? 0 : 1;
}
