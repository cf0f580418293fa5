// dp1: command-line front end for density certificates on degree-1 del Pezzo surfaces.
//
// Exit status: 0 success, 1 no certificate / verification failed, 2 bad input.

#include "dp1/density/certificate.hpp"
#include "dp1/density/pipeline.hpp"
#include "dp1/density/scan.hpp"
#include "dp1/density/torsion_report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dp1;

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zariski density certificates for y^2 = x^3 + a z^6 + b z^3 w^3 + c w^6"};
  app.require_subcommand(1);
  app.set_version_flag("--version", density::toolchain());

  std::string surface_text, point_text, json_path, out_path, cert_path;
  long height = 10, point_height = 100, count = 10;
  bool stamp = false;
  int mmax = 6;
  std::string a_range, b_range, c_range;
  unsigned threads = 1;

  auto* certify = app.add_subcommand("certify", "find or check a witness point and emit a certificate");
  certify->add_option("--surface", surface_text, "A,B,C")->required();
  certify->add_option("--point", point_text, "X,Y,Z,W or (X:Y:Z:W)");
  certify->add_option("--height", height, "fiber search bound on |u|, v")->capture_default_str();
  certify->add_option("--point-height", point_height, "point search bound per fiber")->capture_default_str();
  certify->add_option("--json", json_path, "write the certificate (or failure report) here");
  certify->add_flag("--timestamp", stamp, "record creation time in the certificate");

  auto* pipe = app.add_subcommand("pipeline", "build the 3-section curve and generate points");
  pipe->add_option("--surface", surface_text, "A,B,C")->required();
  pipe->add_option("--point", point_text, "seed point X,Y,Z,W")->required();
  pipe->add_option("--count", count, "points to generate")->capture_default_str();
  pipe->add_option("--out", out_path, "report file (default stdout)");

  auto* scan = app.add_subcommand("scan", "certify every surface of an (a,b,c) grid");
  scan->add_option("--a-range", a_range, "lo..hi")->required();
  scan->add_option("--b-range", b_range, "lo..hi")->required();
  scan->add_option("--c-range", c_range, "lo..hi")->required();
  scan->add_option("--height", height, "fiber search bound")->capture_default_str();
  scan->add_option("--point-height", point_height, "point search bound per fiber")->capture_default_str();
  scan->add_option("--threads", threads, "worker threads")->capture_default_str();
  scan->add_option("--out", out_path, "JSON-lines output (default stdout)");

  auto* verify = app.add_subcommand("verify", "recompute every evidence item of a certificate");
  verify->add_option("file", cert_path, "certificate JSON")->required();

  auto* torsion = app.add_subcommand("torsion", "torsion multisections and rational torsion on sample fibers");
  torsion->add_option("--surface", surface_text, "A,B,C")->required();
  torsion->add_option("--mmax", mmax, "largest order, at most 12")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*certify) {
      const auto s = surface::Surface::parse(surface_text);
      std::optional<surface::WeightedPoint> p;
      if (!point_text.empty()) p = surface::WeightedPoint::parse(point_text);
      const auto outcome = density::certify(s, p, {height, point_height, stamp});
      const std::string text = outcome.to_json().dump(2) + "\n";
      if (json_path.empty()) {
        std::cout << text;
      } else {
        write_output(json_path, text);
      }
      if (!outcome.certificate) {
        for (const auto& r : outcome.reasons) std::cerr << "no certificate: " << r << "\n";
        return 1;
      }
      return 0;
    }
    if (*pipe) {
      const auto s = surface::Surface::parse(surface_text);
      density::PipelineOptions opt;
      opt.count = count;
      const auto rep = density::pipeline(s, surface::WeightedPoint::parse(point_text), opt);
      write_output(out_path, rep.to_json().dump(2) + "\n");
      if (!rep.success()) {
        std::cerr << "retry cap exhausted\n";
        return 1;
      }
      return 0;
    }
    if (*scan) {
      density::ScanOptions opt;
      opt.a = density::IntRange::parse(a_range);
      opt.b = density::IntRange::parse(b_range);
      opt.c = density::IntRange::parse(c_range);
      opt.certify = {height, point_height, false};
      opt.threads = threads;
      write_output(out_path, density::scan_jsonl(opt));
      return 0;
    }
    if (*verify) {
      std::ifstream in(cert_path);
      if (!in) throw std::runtime_error("cannot read " + cert_path);
      density::json cert;
      try {
        cert = density::json::parse(in);
      } catch (const density::json::parse_error& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
      }
      const auto rep = density::verify_certificate(cert);
      for (const auto& m : rep.mismatches) std::cout << m << "\n";
      std::cout << (rep.ok ? "verified" : "NOT verified") << "\n";
      return rep.ok ? 0 : 1;
    }
    if (*torsion) {
      const auto s = surface::Surface::parse(surface_text);
      std::cout << density::torsion_report(s, mmax).to_json().dump(2) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
