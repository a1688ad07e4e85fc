#pragma once

#include <stdexcept>
#include <string>

namespace vmfp {

// Each failure mode the solver can signal gets its own type so callers
// (and the CLI exit-code table) can dispatch on it.
struct non_neutral_charge : std::runtime_error {
  explicit non_neutral_charge(const std::string& msg) : std::runtime_error(msg) {}
};

struct nonzero_mean_b : std::runtime_error {
  explicit nonzero_mean_b(const std::string& msg) : std::runtime_error(msg) {}
};

struct step_mismatch : std::runtime_error {
  explicit step_mismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct cfl_violation : std::runtime_error {
  explicit cfl_violation(const std::string& msg) : std::runtime_error(msg) {}
};

struct grid_mismatch : std::runtime_error {
  explicit grid_mismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct non_positive_elapsed : std::runtime_error {
  explicit non_positive_elapsed(const std::string& msg) : std::runtime_error(msg) {}
};

struct insufficient_samples : std::runtime_error {
  explicit insufficient_samples(const std::string& msg) : std::runtime_error(msg) {}
};

struct no_convergence : std::runtime_error {
  explicit no_convergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct hypothesis_violation : std::runtime_error {
  explicit hypothesis_violation(const std::string& msg) : std::runtime_error(msg) {}
};

struct unknown_scenario : std::runtime_error {
  explicit unknown_scenario(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_failure : std::runtime_error {
  explicit io_failure(const std::string& msg) : std::runtime_error(msg) {}
};

struct version_mismatch : std::runtime_error {
  explicit version_mismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct corrupt_payload : std::runtime_error {
  explicit corrupt_payload(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vmfp
