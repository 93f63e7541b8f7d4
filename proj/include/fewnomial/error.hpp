#pragma once

#include <stdexcept>
#include <string>

namespace fewnomial {

enum class Errc {
  bad_input,
  duplicate_exponent,
  rank_deficient,
  even_index,
  unsupported_dimension,
  zero_polynomial,
  degenerate_system,
  genericity_violation,
  clearing_failure,
  lift_inconsistent,
  solver_stall,
  sampling_exhausted,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fewnomial
