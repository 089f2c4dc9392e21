#pragma once

// Fixed radar-chart input shared by the golden-file check and the
// generator that produced tests/golden/radar.svg. Regenerate the golden
// by rendering exactly these series whenever the renderer changes.

#include <string>
#include <vector>

#include "debatebench/report.hpp"

namespace testsupport {

inline std::vector<std::string> radar_axes() {
    return {"Coverage", "Capacity",  "Latency", "Energy", "Mobility",  "Spectrum",
            "Security", "Sensing",   "Topology", "Access", "Resilience"};
}

inline std::vector<debatebench::RadarSeries> radar_series() {
    return {
        {"Baseline", {62.5, 48.0, 71.25, 55.0, 60.0, 42.5, 66.0, 58.75, 49.0, 70.0, 53.5}},
        {"Regular", {68.0, 55.5, 74.0, 61.25, 66.5, 50.0, 70.25, 63.0, 57.5, 74.5, 60.0}},
        {"Hierarchical", {75.5, 63.0, 80.0, 69.5, 73.25, 58.0, 77.5, 70.0, 64.25, 80.5, 68.0}},
    };
}

}  // namespace testsupport
