#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rackwork {

/// Exact rational, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// "p" or "p/q", optional sign. Throws parse_error.
  static Rat parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p" when integral, else "p/q".
  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_{0};
};

/// 2x2 matrix [[a, b], [c, d]] over Rat.
struct Mat2Q {
  Rat a, b, c, d;

  static Mat2Q identity() { return {1, 0, 0, 1}; }
  static Mat2Q zero() { return {0, 0, 0, 0}; }

  friend bool operator==(const Mat2Q&, const Mat2Q&) = default;
  friend Mat2Q operator+(const Mat2Q& x, const Mat2Q& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2Q operator-(const Mat2Q& x, const Mat2Q& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2Q operator*(const Rat& k, const Mat2Q& x) { return {k * x.a, k * x.b, k * x.c, k * x.d}; }

  /// "[[a,b],[c,d]]".
  std::string str() const;
};

Mat2Q mat_mul(const Mat2Q& x, const Mat2Q& y);
/// Binary exponentiation; mat_pow(x, 0) is the identity.
Mat2Q mat_pow(const Mat2Q& x, std::uint64_t k);
Rat trace(const Mat2Q& x);
Rat det(const Mat2Q& x);

/// A + A^2 + ... + A^count by repeated multiply-accumulate.
Mat2Q brute_sum(const Mat2Q& a, std::uint64_t count);

struct SumResult {
  unsigned level = 0;
  /// tr(A^(3^j)) + 1 for j = 0..level-1.
  std::vector<Rat> factors;
  /// (3^level + 1) / 2.
  std::uint64_t power_exponent = 0;
  /// Product of the factors.
  Rat scalar;
  /// A^power_exponent.
  Mat2Q power;
  /// scalar * power.
  Mat2Q closed_form;
  std::optional<Mat2Q> oracle;

  bool oracle_agrees() const { return oracle && *oracle == closed_form; }
};

struct SeriesOptions {
  unsigned max_level = 12;
  /// The brute-force oracle runs only while 3^level is at most this.
  std::uint64_t max_oracle_terms = 729;
};

/// Sum of A^k for k = 1..3^level through the trace-product closed form.
/// Throws determinant_not_one (message carries det) and level_too_large.
SumResult marcus_sum(const Mat2Q& a, unsigned level, bool with_oracle, const SeriesOptions& opt = {});

/// Seeded product of word_length shears [[1,k],[0,1]] / [[1,0],[k,1]], |k| <= coeff_bound.
Mat2Q random_unimodular(std::uint64_t seed, unsigned word_length, unsigned coeff_bound);

std::uint64_t pow3(unsigned level);

}  // namespace rackwork
