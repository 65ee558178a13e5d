#pragma once

namespace consign {

inline constexpr const char* kVersion = "0.1.0";

}
