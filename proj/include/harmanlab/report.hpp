#pragma once

// Reproducibility header embedded in every machine-readable report.

#include <json.hpp>

#include <string>

namespace harmanlab {

inline constexpr const char* kArtifactVersion = "1.0.0";

using ojson = nlohmann::ordered_json;

struct RunConfig {
    std::string subcommand;
    ojson flags = ojson::object();
    unsigned long long seed = 42;
    int threads = 1;

    ojson header() const {
        ojson h;
        h["version"] = kArtifactVersion;
        h["subcommand"] = subcommand;
        h["flags"] = flags;
        h["seed"] = seed;
        h["threads"] = threads;
        return h;
    }
};

inline int env_thread_cap() {
    const char* v = std::getenv("HARMANLAB_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n > 0 ? n : 1;
}

}  // namespace harmanlab
