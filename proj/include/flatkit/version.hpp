#pragma once

namespace flatkit {

inline constexpr const char* kToolName = "flatkit";
inline constexpr const char* kToolVersion = "0.1.0";

// Identifier of the deterministic generator used by every randomized
// operation; embedded in reports so results can be reproduced elsewhere.
inline constexpr const char* kRngAlgorithmId = "splitmix64-v1";

}  // namespace flatkit
