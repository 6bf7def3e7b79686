#pragma once

namespace gaugekit {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace gaugekit
