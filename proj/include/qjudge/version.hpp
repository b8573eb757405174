#pragma once

#include <string>

namespace qjudge {

inline constexpr const char* ENGINE_NAME = "qjudge";
inline constexpr const char* ENGINE_VERSION = "0.1.0";

inline std::string engine_string() {
    return std::string(ENGINE_NAME) + " " + ENGINE_VERSION;
}

}  // namespace qjudge
