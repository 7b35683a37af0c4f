#pragma once

#include "commdet/experiments.hpp"
#include "commdet/hofstadter.hpp"
#include "commdet/proof_script.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace commdet {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z);
Json det_estimate_json(const DetEstimate& d);
Json partials_json(const PartialSumSeries& s);

Json report_json(const DiagShiftReport& r);
Json report_json(const PhaseStepReport& r);
Json report_json(const ToeplitzReport& r);
Json report_json(const ChernReport& r);
Json report_json(const KitaevConditionReport& r);
Json report_json(const CheckReport& r);

/// Uniform run-record envelope. The `seconds` field is part of the schema but
/// pinned to 0.0 so identical command + seed produces byte-identical JSON;
/// wall time is printed on the human-readable channel instead.
Json run_record(const std::string& command, Json params, Json values, Json reference,
                double tolerance, bool pass, Json diagnostics, std::uint64_t seed);

} // namespace commdet
