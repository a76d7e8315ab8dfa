#pragma once

#include <stdexcept>
#include <string>

namespace intspace {

// Invalid parameters or out-of-domain arguments. CLI maps this to exit 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// File or parse failures during ingestion. CLI maps this to exit 1.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine exhausted its budget. Carries the best estimate so far
// and the achieved error bound. CLI maps this to exit 3.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double estimate, double achieved_error)
        : std::runtime_error(what), estimate(estimate), achieved_error(achieved_error) {}
    double estimate;
    double achieved_error;
};

}  // namespace intspace
