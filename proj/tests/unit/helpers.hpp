#pragma once

#include <complex>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "utsforge/transform.hpp"

namespace testutil {

using utsforge::Complex;

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    const double re = u(rng);
    return {re, u(rng)};
}

inline std::vector<Complex> random_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::vector<Complex> v(n);
    for (auto& z : v) z = random_complex(rng, scale);
    return v;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("utsforge_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testutil
