#include "fewnomial/numeric.hpp"

#include <cctype>

#include "fewnomial/error.hpp"

namespace fewnomial {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_input: return "bad_input";
    case Errc::duplicate_exponent: return "duplicate_exponent";
    case Errc::rank_deficient: return "rank_deficient";
    case Errc::even_index: return "even_index";
    case Errc::unsupported_dimension: return "unsupported_dimension";
    case Errc::zero_polynomial: return "zero_polynomial";
    case Errc::degenerate_system: return "degenerate_system";
    case Errc::genericity_violation: return "genericity_violation";
    case Errc::clearing_failure: return "clearing_failure";
    case Errc::lift_inconsistent: return "lift_inconsistent";
    case Errc::solver_stall: return "solver_stall";
    case Errc::sampling_exhausted: return "sampling_exhausted";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::bad_input, "empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      fail(Errc::bad_input, "bad rational literal: " + s);
  }
  Rat q;
  if (q.set_str(s, 10) != 0) fail(Errc::bad_input, "bad rational literal: " + s);
  if (q.get_den() == 0) fail(Errc::bad_input, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) fail(Errc::bad_input, "0 raised to a negative power");
    return Rat(0);
  }
  Rat b = base;
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), mag);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), mag);
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t st = seed;
  for (auto& w : s_) w = splitmix64(st);
}

std::uint64_t Rng::next() {
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

long Rng::range(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the distribution exactly uniform.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

double Rng::uniform01() { return (next() >> 11) * 0x1.0p-53; }

long Rng::nonzero(long mag) {
  long v;
  do {
    v = range(-mag, mag);
  } while (v == 0);
  return v;
}

Rng Rng::fork() { return Rng(next() ^ 0xd1342543de82ef95ULL); }

}  // namespace fewnomial
