#pragma once

namespace srgcl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace srgcl
