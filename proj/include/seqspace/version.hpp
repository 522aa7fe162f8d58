#pragma once

namespace seqspace {

inline constexpr const char* kToolkitName = "seqspace";
inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace seqspace
