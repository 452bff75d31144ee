#pragma once

#include <stdexcept>
#include <string>

namespace rbmcs {

// Invalid run configuration (bad parameter combination, divisibility, ...).
// The message names the violated invariant; the CLI maps this to exit code 1.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A state entry became non-finite during time stepping.
class blowup_error : public std::runtime_error {
public:
    blowup_error(std::string msg, int particle, double time)
        : std::runtime_error(std::move(msg)), particle(particle), time(time) {}

    int particle;
    double time;
};

} // namespace rbmcs
