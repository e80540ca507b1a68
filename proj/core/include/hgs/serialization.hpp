#pragma once

#include <string>

#include "hgs/loops.hpp"
#include "hgs/schottky.hpp"

namespace hgs {

/// JSON layout: complex numbers as [re, im], sphere points as [re, im] or
/// "inf", disks as Hermitian triples {"a", "b", "d"}, maps as four matrix
/// entries. Keys are emitted sorted, numbers in shortest round-trip form, so
/// write -> read -> write is byte-identical. Readers reject unknown keys.

std::string config_to_json(const SchottkyConfig& cfg);
SchottkyConfig config_from_json(const std::string& text);  // throws ParseError

std::string certificate_to_json(const Certificate& cert);

std::string report_to_json(const LoopReport& report);
LoopReport report_from_json(const std::string& text);  // throws ParseError

} // namespace hgs
