#include "dp1/density/scan.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace dp1::density {

using algebra::Rat;

IntRange IntRange::parse(const std::string& text) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      const long v = std::stol(text);
      return {v, v};
    }
    IntRange r{std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range");
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "', expected lo..hi");
  }
}

namespace {

json scan_one(const surface::Surface& s, const CertifyOptions& opt) {
  json rec{{"a", s.a.str()}, {"b", s.b.str()}, {"c", s.c.str()}};
  try {
    const auto out = certify(s, std::nullopt, opt);
    if (out.certificate) {
      rec["status"] = "certified";
      rec["certificate"] = out.certificate->to_json();
    } else {
      rec["status"] = out.reasons.empty() ? "no certificate" : out.reasons.front();
      rec["reasons"] = out.reasons;
    }
    rec["fibers_searched"] = out.fibers_searched;
  } catch (const std::exception& e) {
    rec["status"] = "error";
    rec["reasons"] = json::array({e.what()});
  }
  return rec;
}

}  // namespace

std::vector<json> scan(const ScanOptions& opt) {
  std::vector<surface::Surface> grid;
  for (long a = opt.a.lo; a <= opt.a.hi; ++a)
    for (long b = opt.b.lo; b <= opt.b.hi; ++b)
      for (long c = opt.c.lo; c <= opt.c.hi; ++c) grid.push_back({Rat(a), Rat(b), Rat(c)});
  CertifyOptions copt = opt.certify;
  copt.timestamp = false;
  std::vector<json> out(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) out[i] = scan_one(grid[i], copt);
  };
  const unsigned n = std::max(1U, opt.threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string scan_jsonl(const ScanOptions& opt) {
  std::string s;
  for (const auto& rec : scan(opt)) s += rec.dump() + "\n";
  return s;
}

}  // namespace dp1::density
