#pragma once

#include <json.hpp>

#include "irbar/checks.hpp"
#include "irbar/eigen.hpp"
#include "irbar/expmap.hpp"
#include "irbar/imatrix.hpp"

namespace irbar {

using Json = nlohmann::ordered_json;

Json to_json(const Interval& x);
Json to_json(const IMatrix& a);
Json to_json(const InverseResult& r);
Json to_json(const EigenvalueRecord& r);
Json to_json(const EigenvectorRecord& r);
Json to_json(const DiagonalizationRecord& r);
Json to_json(const ExpReport& r);
Json to_json(const ProbeReport& r);
Json to_json(const Finding& f);

}  // namespace irbar
