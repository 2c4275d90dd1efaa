#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace golod {

/// Exact field element. Over QQ it is a canonical rational; over F_p it is an
/// integer representative in [0, p).
using Scalar = mpq_class;

/// Base error for everything the library throws. Kinds map onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { Input = 1, CapExceeded = 2, Internal = 3 };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Error inputError(const std::string& what) { return Error(Error::Kind::Input, what); }
inline Error capError(const std::string& what) { return Error(Error::Kind::CapExceeded, what); }
inline Error internalError(const std::string& what) {
  return Error(Error::Kind::Internal, what);
}

/// The coefficient field of a ring: QQ (characteristic 0) or F_p with p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool isRational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar normalize(Scalar a) const {
    if (p_ != 0) {
      mpz_class num = a.get_num();
      if (a.get_den() != 1) {
        mpz_class den = a.get_den();
        mpz_class inv;
        mpz_class mod = p_;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
          throw inputError("denominator divisible by the characteristic");
        num *= inv;
      }
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), p_);
      return Scalar(r);
    }
    return a;
  }

  Scalar fromInt(long v) const { return normalize(Scalar(v)); }
  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string name() const { return p_ == 0 ? "QQ" : "F" + std::to_string(p_); }
  std::string format(const Scalar& a) const { return a.get_str(); }

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}

  Scalar reduce(Scalar a) const {
    if (p_ == 0) return a;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_num_mpz_t(), p_);
    return Scalar(r);
  }

  std::uint32_t p_ = 0;
};

}  // namespace golod
