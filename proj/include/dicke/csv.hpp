// csv.hpp — CSV rendering at full double precision and atomic file output

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/version.hpp"

namespace dicke::io {

// 17 significant digits round-trip any double exactly.
inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string fmt(int x) {
    return std::to_string(x);
}

// Every emitted CSV opens with the version/unit stamp.
inline std::string header_comment() {
    return std::string("# dicke-bethe v") + kVersion + ", units: energy/ω, time·ω\n";
}

// write-temp-then-rename so readers never observe a partial file
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open output file: " + tmp);
        out << content;
        if (!out) throw ConfigError("failed writing output file: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

} // namespace dicke::io
