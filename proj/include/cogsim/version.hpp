#pragma once

namespace cogsim {

inline constexpr const char* kCodeVersion = "0.1.0";
inline constexpr const char* kDatasetFormat = "cogsim-dataset";
inline constexpr int kDatasetFormatVersion = 1;

}  // namespace cogsim
