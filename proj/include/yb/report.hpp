#pragma once

// Structured verification reports and their JSON form.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "yb/leaf.hpp"
#include "yb/mat2.hpp"

namespace yb {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct FailureRecord {
  std::uint64_t trial = 0;
  Json inputs;
  Json lhs;
  Json rhs;
};

struct TrialCounts {
  std::uint64_t attempted = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
};

struct VerificationReport {
  std::string suite;
  std::string backend;
  std::uint64_t seed = 0;
  TrialCounts trials;
  std::vector<FailureRecord> failures;
  std::uint64_t wall_ms = 0;

  bool ok() const { return failures.empty(); }
  Json to_json() const;
};

Json reports_to_json(const std::vector<VerificationReport>& reports);

// JSON forms: scalars as their textual form, matrices as {"a1":...,"a4":...},
// points as {"coords":[...],"params":[...]}.
template <Scalar F>
Json scalar_to_json(const F& s) {
  return scalar_str(s);
}

template <Scalar F>
Json mat2_to_json(const Mat2<F>& m) {
  Json j;
  j["a1"] = scalar_str(m.a1);
  j["a2"] = scalar_str(m.a2);
  j["a3"] = scalar_str(m.a3);
  j["a4"] = scalar_str(m.a4);
  return j;
}

template <Scalar F>
Json point_to_json(const ParamPoint<F>& p) {
  Json j;
  j["coords"] = Json::array();
  for (const auto& c : p.coords) j["coords"].push_back(scalar_str(c));
  j["params"] = Json::array();
  for (const auto& c : p.params) j["params"].push_back(scalar_str(c));
  return j;
}

Mat2<GaussianRational> mat2_from_json(const Json& j);
ParamPoint<GaussianRational> point_from_json(const Json& j);
ParamPoint<ComplexFloat> point_from_json_float(const Json& j);

}  // namespace yb
