#ifndef WMOD_REPORT_HPP
#define WMOD_REPORT_HPP

#include <complex>
#include <string>

#include <json.hpp>

#include "wmod/classify.hpp"
#include "wmod/group_action.hpp"
#include "wmod/inner_product.hpp"
#include "wmod/norm_tower.hpp"
#include "wmod/realization.hpp"
#include "wmod/sphere.hpp"
#include "wmod/verify.hpp"

namespace wmod {

// Key order is part of the output contract: reports are compared byte-for-byte
// across runs, so everything funnels through ordered_json and dump_report.
using Json = nlohmann::ordered_json;

Json json_complex(std::complex<double> z);

/// Envelope: {"schema": "wmod-report/1", "kind": kind, ...body}.
Json wrap_report(const std::string& kind, Json body);

/// Canonical rendering: 2-space indent, trailing newline, no timestamps.
std::string dump_report(const Json& j);

Json to_json(RealizationKind kind, const ModuleParams& p, bool exact);
Json to_json(const RelationSuiteResult& r);
Json to_json(const WeightDecomposition& d);
Json to_json(const ActionTypeReport& r);
Json to_json(const BranchReport& r, const TruncatedModule& m);
Json to_json(const FiniteTypeReport& r);
Json to_json(const GrowthReport& r);
Json to_json(const AdjointDefectReport& r);
Json to_json(const ChangeOfBasisResult& r);
Json to_json(const BoundednessProfile& p);
Json to_json(const GlobalInfinitesimalReport& r);
Json to_json(const ClassifyReport& r);
Json to_json(const LabelFiniteType& r);

/// "L,b" rows of the level-0 obstruction profile.
std::string profile_csv(const BoundednessProfile& p);

}  // namespace wmod

#endif
