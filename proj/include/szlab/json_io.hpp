#pragma once

#include <string>

#include <json.hpp>

#include "szlab/counting.hpp"
#include "szlab/cutnorm.hpp"
#include "szlab/extremal.hpp"
#include "szlab/pipeline.hpp"
#include "szlab/suites.hpp"

namespace szlab {

nlohmann::ordered_json to_json(const CutNormResult& r);
nlohmann::ordered_json to_json(const GowersResult& r);
nlohmann::ordered_json to_json(const LfcReport& r);
nlohmann::ordered_json to_json(const CountingDiagnostics& d);
nlohmann::ordered_json to_json(const DenseGapResult& r);
nlohmann::ordered_json to_json(const MarginalTriple& t);
nlohmann::ordered_json to_json(const ExtremalRecord& r);
nlohmann::ordered_json to_json(const SieveParams& p);
nlohmann::ordered_json to_json(const PipelineReport& r);
nlohmann::ordered_json to_json(const SuiteResult& r);
nlohmann::ordered_json to_json(const UniformityResult& r);
nlohmann::ordered_json to_json(const StrongLfcDiagnostics& d);
nlohmann::ordered_json to_json(const DenseModelVerifyResult& r);

// Writes via a sibling temp file and rename, so readers never observe a
// partially written report.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace szlab
