// cli.hpp — command-line surface: couplings, sweep, evolve, figure, validate

#pragma once

#include <string>
#include <vector>

namespace fiberising::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;     // config parse or validation error
inline constexpr int kExitPole = 3;       // PoleProximity
inline constexpr int kExitIo = 4;         // unwritable output
inline constexpr int kExitNumerical = 5;  // numerical breakdown

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without the program name

}  // namespace fiberising::cli
