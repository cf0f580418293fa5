#pragma once

#include "dp1/density/serialize.hpp"
#include "dp1/jacobian/model.hpp"
#include "dp1/multisection/multisection.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dp1::density {

struct PipelineOptions {
  long count = 10;      // points to generate in the genus-one case
  long retry_cap = 25;  // multiples m P tried
  std::vector<algebra::Rat> section_samples{algebra::Rat(1), algebra::Rat(2), algebra::Rat(3), algebra::Rat(-1),
                                            algebra::Rat(algebra::Int(1), algebra::Int(2))};
};

struct PipelineReport {
  int case_number = 0;  // 1: section over k, 2: genus 0, 3: genus 1, 0: retry cap exhausted
  long multiple = 0;
  surface::WeightedPoint base;
  std::optional<multisection::MultisectionCurve> curve;
  std::vector<surface::WeightedPoint> section_points;
  std::optional<jacobian::GenusOneModel> model;
  std::optional<jacobian::DCertificate> d_certificate;
  jacobian::Generation generated;
  std::vector<std::pair<long, std::string>> failures;  // per multiple

  bool success() const { return case_number != 0; }
  json to_json() const;
};

/// Walks R over m P (m = 1, 2, ...) on P's fiber until a base point yields a
/// section, a genus-0 curve or a certified genus-one model.
PipelineReport pipeline(const surface::Surface& s, const surface::WeightedPoint& seed, const PipelineOptions& opt = {});

}  // namespace dp1::density
