#pragma once

namespace foxprim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace foxprim
