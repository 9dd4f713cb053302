// Minimal stderr logger gated by the ZC_LOG_LEVEL environment variable
// (error | info | debug; default error).
#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace zc {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("ZC_LOG_LEVEL");
        if (env == nullptr) return LogLevel::Error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

inline void log_error(const std::string& msg) {
    std::fprintf(stderr, "[zc error] %s\n", msg.c_str());
}

inline void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::fprintf(stderr, "[zc info] %s\n", msg.c_str());
}

inline void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) std::fprintf(stderr, "[zc debug] %s\n", msg.c_str());
}

}  // namespace zc
