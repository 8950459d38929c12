// presets.hpp — bundled scenario configs for the reference figure runs.
//
// Grid/time conventions: equally spaced energies between omega ± Omega/2
// (never pinned; pinning breaks the uniform spacing the closed forms assume),
// resonant spin = grid point nearest omega, t_max = 1.25 * 4 pi / d with
// 2000 samples. Bell pairs straddle the resonance: A is the spin just above
// omega and B sits |B - A| grid steps below it.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke::presets {

inline const std::map<std::string, std::string>& table() {
    static const std::map<std::string, std::string> presets = {
        {"fig2a", R"({
  "omega": 1.0, "g": 0.05, "L": 4,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_spin", "A": "resonant"},
  "times": {"t_max": 471.23889803846896, "steps": 2000},
  "outputs": ["survival"],
  "comparison": {"asymptotic": true}
}
)"},
        {"fig2b", R"({
  "omega": 1.0, "g": 0.05, "L": 6,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_spin", "A": "resonant"},
  "times": {"t_max": 785.3981633974482, "steps": 2000},
  "outputs": ["survival"],
  "comparison": {"asymptotic": true}
}
)"},
        {"fig2c", R"({
  "omega": 1.0, "g": 0.05, "L": 10,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_spin", "A": "resonant"},
  "times": {"t_max": 1413.7166941154069, "steps": 2000},
  "outputs": ["survival"],
  "comparison": {"asymptotic": true}
}
)"},
        {"fig2d", R"({
  "omega": 1.0, "g": 0.05, "L": 20,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_spin", "A": "resonant"},
  "times": {"t_max": 2984.5130209103036, "steps": 2000},
  "outputs": ["survival"],
  "comparison": {"asymptotic": true}
}
)"},
        {"fig3", R"({
  "omega": 1.0, "g": 0.05, "L": 20,
  "disorder": {"kind": "uniform_random", "center": 1.0, "width": 0.1, "seed": 1},
  "initial": {"kind": "single_spin", "A": "resonant"},
  "times": {"t_max": 2984.5130209103036, "steps": 2000},
  "outputs": ["survival"],
  "sweep": {"num_seeds": 50}
}
)"},
        {"fig4a", R"({
  "omega": 1.0, "g": 0.05, "L": 4,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_photon"},
  "times": {"t_max": 471.23889803846896, "steps": 2000},
  "outputs": ["photon"]
}
)"},
        {"fig4b8", R"({
  "omega": 1.0, "g": 0.05, "L": 8,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_photon"},
  "times": {"t_max": 1099.5574287564275, "steps": 2000},
  "outputs": ["photon"]
}
)"},
        {"fig4b12", R"({
  "omega": 1.0, "g": 0.05, "L": 12,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_photon"},
  "times": {"t_max": 1727.875959474386, "steps": 2000},
  "outputs": ["photon"]
}
)"},
        {"fig4c", R"({
  "omega": 1.0, "g": 0.05, "L": 20,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "single_photon"},
  "times": {"t_max": 2984.5130209103036, "steps": 2000},
  "outputs": ["photon"]
}
)"},
        {"fig5a", R"({
  "omega": 1.0, "g": 0.05, "L": 20,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "bell", "A": 11, "B": 10, "sign": "both"},
  "times": {"t_max": 2984.5130209103036, "steps": 2000},
  "outputs": ["fidelity", "photon"],
  "comparison": {"asymptotic": true}
}
)"},
        {"fig5b", R"({
  "omega": 1.0, "g": 0.05, "L": 20,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "bell", "A": 11, "B": 9, "sign": "both"},
  "times": {"t_max": 2984.5130209103036, "steps": 2000},
  "outputs": ["fidelity", "photon"],
  "comparison": {"asymptotic": true}
}
)"},
        {"fig5c", R"({
  "omega": 1.0, "g": 0.05, "L": 20,
  "disorder": {"kind": "equally_spaced", "center": 1.0, "width": 0.1},
  "initial": {"kind": "bell", "A": 11, "B": 8, "sign": "both"},
  "times": {"t_max": 2984.5130209103036, "steps": 2000},
  "outputs": ["fidelity", "photon"],
  "comparison": {"asymptotic": true}
}
)"},
    };
    return presets;
}

inline const std::string& get(const std::string& name) {
    const auto& t = table();
    const auto it = t.find(name);
    if (it == t.end()) {
        std::string names;
        for (const auto& [k, v] : t) {
            if (!names.empty()) names += ", ";
            names += k;
        }
        throw ConfigError("unknown preset \"" + name + "\"; available: " + names);
    }
    return it->second;
}

inline std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : table()) out.push_back(k);
    return out;
}

} // namespace dicke::presets
