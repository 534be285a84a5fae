#pragma once

namespace ppc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ppc
