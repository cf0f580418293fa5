#pragma once

#include "dp1/density/certificate.hpp"

#include <string>
#include <vector>

namespace dp1::density {

/// Inclusive integer range "lo..hi", or a single value.
struct IntRange {
  long lo = 0;
  long hi = 0;
  static IntRange parse(const std::string& text);
};

struct ScanOptions {
  IntRange a, b, c;
  CertifyOptions certify;
  unsigned threads = 1;
};

/// One JSON object per surface of the grid, sorted by (a, b, c). The output
/// does not depend on the thread count.
std::vector<json> scan(const ScanOptions& opt);

/// JSON-lines rendering of scan().
std::string scan_jsonl(const ScanOptions& opt);

}  // namespace dp1::density
