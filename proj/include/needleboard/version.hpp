#pragma once

namespace needleboard {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "needleboard/1";

}  // namespace needleboard
