#pragma once

#include <string>

#include "curvetopo/rotation.hpp"

namespace curvetopo {

/// Report file: JSON object
///   {rotation: {turning, whitney, new, agreement}, basepoint_t,
///    regions: [{id, wind, unbounded}],
///    crossings: [{id, x, y, t_first, t_second, wind, sign}],
///    euler: {v, e, f}}
/// with fixed key order, so equal reports serialize to identical bytes.
std::string report_to_json(const AnalysisReport& report);

/// Human-readable summary; the first line reads "rotation: T W N (agree)".
std::string report_to_text(const AnalysisReport& report);

}  // namespace curvetopo
