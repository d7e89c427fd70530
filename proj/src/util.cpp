#include "fmethod/util.hpp"

#include <iostream>

namespace fmethod {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("FMETHOD_LOG");
        if (!env) return LogLevel::Info;
        std::string s(env);
        if (s == "quiet" || s == "0") return LogLevel::Quiet;
        if (s == "debug" || s == "2") return LogLevel::Debug;
        return LogLevel::Info;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[fmethod] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) std::cerr << "[fmethod:debug] " << msg << "\n";
}

} // namespace fmethod
