#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fewnomial {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;

/// Parse "p/q" or "p" (decimal integers, optional sign) into a canonical rational.
Rat rat_from_string(const std::string& s);

/// Render canonically: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);
Int int_pow(const Int& base, unsigned long e);

/// base^e for integer e of either sign; throws on 0^negative.
Rat rat_pow(const Rat& base, long e);

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

/// Deterministic 64-bit generator (xoshiro256**), seeded explicitly everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [lo, hi], inclusive.
  long range(long lo, long hi);
  double uniform01();
  /// Uniform nonzero integer in [-mag, mag].
  long nonzero(long mag);
  /// Split off an independent stream (for per-instance seeding).
  Rng fork();

 private:
  std::uint64_t s_[4];
};

}  // namespace fewnomial
