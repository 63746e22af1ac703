#pragma once

namespace ptq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ptq
