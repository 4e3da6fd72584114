#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace crs {

using Int = mpz_class;

inline Int int_from_string(const std::string& s) { return Int(s, 10); }

inline size_t bit_length(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// Canonical residue in [0, m).
inline Int mod_reduce(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Deterministic random generator. Caller-owned; not copyable, and must not be
/// shared across concurrent callers.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {
    gmp_randinit_mt(state_);
    gmp_randseed_ui(state_, static_cast<unsigned long>(seed));
  }
  ~Rng() { gmp_randclear(state_); }
  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;

  /// Uniform in [0, n), n >= 1.
  Int below(const Int& n) {
    Int r;
    mpz_urandomm(r.get_mpz_t(), state_, n.get_mpz_t());
    return r;
  }

  uint64_t seed() const { return seed_; }

 private:
  gmp_randstate_t state_;
  uint64_t seed_;
};

/// Odd primes in [3, bound] by trial sieve; bound is small (desk scale).
std::vector<long> odd_primes_upto(long bound);

}  // namespace crs
