#pragma once

namespace cbound {

inline constexpr const char* version_string = "0.1.0";

// Identifier for the constants set baked into constants.hpp; written into
// every artifact header so outputs can be traced to the values that made them.
inline constexpr const char* constants_set_id = "codata2018";

}  // namespace cbound
