#pragma once

namespace ldseq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ldseq
