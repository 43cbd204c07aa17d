#pragma once

namespace specden {
inline constexpr const char* kVersion = "0.1.0";
}
