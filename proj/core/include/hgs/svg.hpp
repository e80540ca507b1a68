#pragma once

#include <string>

#include "hgs/loops.hpp"
#include "hgs/schottky.hpp"

namespace hgs {

struct PlotOptions {
    int orbit_depth = 0;  // 0 disables the orbit scatter layer
    double pad_fraction = 0.1;
};

/// Deterministic SVG of a configuration: the four disks (complement disks
/// drawn as an even-odd frame with a circular hole), their boundary circles,
/// and the finite marked fixed points. Identical inputs give identical bytes.
std::string render_config_svg(const SchottkyConfig& cfg, const PlotOptions& opts = {});

/// Configuration at the first sample plus the closed alpha trajectory.
std::string render_report_svg(const LoopReport& report, const PlotOptions& opts = {});

} // namespace hgs
