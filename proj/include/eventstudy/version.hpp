#pragma once

namespace eventstudy {

inline constexpr const char* kVersion = "0.1.0";

} // namespace eventstudy
