#pragma once

namespace chiredge {

inline constexpr const char* version = "0.1.0";

}
