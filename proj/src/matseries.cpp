#include "rackwork/matseries.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "rackwork/error.hpp"

namespace rackwork {

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::parse_error, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw Error(ErrorCode::parse_error, "not a rational: \"" + std::string(text) + "\"");
  mpz_class p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::parse_error, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) p = -p;
  return Rat(mpq_class(p, q));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

std::string Mat2Q::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Mat2Q mat_mul(const Mat2Q& x, const Mat2Q& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2Q mat_pow(const Mat2Q& x, std::uint64_t k) {
  Mat2Q result = Mat2Q::identity();
  Mat2Q base = x;
  while (k != 0) {
    if (k & 1U) result = mat_mul(result, base);
    k >>= 1U;
    if (k != 0) base = mat_mul(base, base);
  }
  return result;
}

Rat trace(const Mat2Q& x) { return x.a + x.d; }

Rat det(const Mat2Q& x) { return x.a * x.d - x.b * x.c; }

Mat2Q brute_sum(const Mat2Q& a, std::uint64_t count) {
  Mat2Q power = Mat2Q::identity();
  Mat2Q sum = Mat2Q::zero();
  for (std::uint64_t k = 0; k < count; ++k) {
    power = mat_mul(power, a);
    sum = sum + power;
  }
  return sum;
}

std::uint64_t pow3(unsigned level) {
  std::uint64_t p = 1;
  for (unsigned i = 0; i < level; ++i) p *= 3;
  return p;
}

SumResult marcus_sum(const Mat2Q& a, unsigned level, bool with_oracle, const SeriesOptions& opt) {
  if (const Rat d = det(a); !(d == Rat(1)))
    throw Error(ErrorCode::determinant_not_one, "det = " + d.str());
  if (level < 1 || level > opt.max_level)
    throw Error(ErrorCode::level_too_large,
                "level " + std::to_string(level) + " outside 1.." + std::to_string(opt.max_level));

  SumResult r;
  r.level = level;
  r.scalar = Rat(1);
  Mat2Q cube_power = a;  // A^(3^j)
  for (unsigned j = 0; j < level; ++j) {
    r.factors.push_back(trace(cube_power) + Rat(1));
    r.scalar *= r.factors.back();
    if (j + 1 < level) cube_power = mat_mul(mat_mul(cube_power, cube_power), cube_power);
  }
  const std::uint64_t terms = pow3(level);
  r.power_exponent = (terms + 1) / 2;
  r.power = mat_pow(a, r.power_exponent);
  r.closed_form = r.scalar * r.power;
  if (with_oracle && terms <= opt.max_oracle_terms) r.oracle = brute_sum(a, terms);
  return r;
}

Mat2Q random_unimodular(std::uint64_t seed, unsigned word_length, unsigned coeff_bound) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution upper(0.5);
  const long bound = static_cast<long>(coeff_bound);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  Mat2Q m = Mat2Q::identity();
  for (unsigned i = 0; i < word_length; ++i) {
    const bool up = upper(rng);
    const Rat k(coeff(rng));
    const Mat2Q shear = up ? Mat2Q{1, k, 0, 1} : Mat2Q{1, 0, k, 1};
    m = mat_mul(m, shear);
  }
  return m;
}

}  // namespace rackwork
