#ifndef RECON_ERRORS_HPP
#define RECON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recon {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidAction : std::runtime_error {
    explicit InvalidAction(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleParams : std::runtime_error {
    explicit InfeasibleParams(const std::string& what) : std::runtime_error(what) {}
};

struct Exhausted : std::runtime_error {
    explicit Exhausted(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyCorpus : std::runtime_error {
    explicit EmptyCorpus(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace recon

#endif
