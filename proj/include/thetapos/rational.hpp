#pragma once

#include <gmpxx.h>

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetapos {

/// Exact rational scalar used throughout the library.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p", "-p/q". Whitespace is not accepted.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline double to_double(const Rat& r) { return r.get_d(); }

/// Exact square root; nullopt when the argument is not a square of a rational.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rat out(sn, sd);
  out.canonicalize();
  return out;
}

/// Seeded generator of small rationals for property tests and sampled CLI checks.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform numerator in [-num_bound, num_bound], denominator in [1, den_bound].
  Rat rational(long num_bound = 6, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return rat(num(eng_), den(eng_));
  }

  Rat positive(long num_bound = 6, long den_bound = 4) {
    std::uniform_int_distribution<long> num(1, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return rat(num(eng_), den(eng_));
  }

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace thetapos
