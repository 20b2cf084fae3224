#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "horo/harness.hpp"

namespace horo {

/// 17 significant digits, enough to read back the same double.
std::string format_number(double v);

// Header row first, LF line endings.
void write_distortion_csv(std::ostream& os, const std::vector<DistortionRow>& rows);
void write_control_csv(std::ostream& os, const std::vector<ControlRow>& rows);
void write_fill_csv(std::ostream& os, const std::vector<FillRow>& rows);

}  // namespace horo
