#pragma once

#include <string>

#include <json.hpp>

#include "bellcert/construction.hpp"
#include "bellcert/criterion.hpp"
#include "bellcert/seesaw.hpp"
#include "bellcert/state.hpp"

namespace bellcert::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "bellcert.report.v1";
inline constexpr const char* kStateSchema = "bellcert.state.v1";

/// Complex scalars serialize as [re, im]; matrices as row-major nested arrays.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// State files: {"kind": "dense" | "bell_diagonal" | "fano" | "m_copies", ...}.
DensityMatrix state_from_json(const Json& j);
DensityMatrix load_state_file(const std::string& path);
Json dense_state_to_json(const DensityMatrix& rho);

Json observable_set_to_json(const ObservableSet& obs);
ObservableSet observable_set_from_json(const Json& j);

Json criterion_report_to_json(const CriterionReport& r);
Json oracle_result_to_json(const OracleResult& r, bool include_observables = true);
Json proposition1_to_json(const Proposition1Checks& c);

}  // namespace bellcert::io
