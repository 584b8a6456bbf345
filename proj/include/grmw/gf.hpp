#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "grmw/error.hpp"

namespace grmw {

// Finite field F_q with q = p^e.  Elements are integer codes 0..q-1: the code
// of an element is its base-p digit expansion in the power basis
// {1, x, ..., x^(e-1)} of F_p[x]/(modulus), least-significant digit = the
// coefficient of 1.  Code 0 is the zero element and code 1 is one.
//
// Fields are immutable and shared via FieldPtr.  Full add/mul/neg/inv tables
// are precomputed for q <= 256; larger fields fall back to direct polynomial
// arithmetic per operation.
class Field {
 public:
  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int q() const noexcept { return q_; }
  // Modulus coefficients, constant term first, length e+1, monic.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;          // throws DivisionByZero on a == 0
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long n) const;

  bool is_square(int a) const;   // true iff a is a square in F_q (0 counts)

  // All elements in canonical order: codes 0, 1, ..., q-1.
  std::vector<int> elements() const;

  // Fast paths used by inner loops; valid only when tables() is true.
  bool tables() const noexcept { return has_tables_; }
  const uint16_t* add_table() const noexcept { return add_tab_.data(); }
  const uint16_t* mul_table() const noexcept { return mul_tab_.data(); }

 private:
  friend std::shared_ptr<const Field> field_make(int, int,
                                                 const std::vector<int>*);
  Field() = default;

  std::vector<int> decode(int code) const;       // base-p digits, length e
  int encode(const std::vector<int>& digits) const;
  std::vector<int> raw_mul(const std::vector<int>& a,
                           const std::vector<int>& b) const;

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  bool has_tables_ = false;
  std::vector<uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Builds F_{p^e}.  If modulus is null a default irreducible modulus is used
// (required to exist in the built-in table when e > 1).  Errors: NonPrimeP,
// ReducibleModulus, DegreeMismatch, NonMonicModulus, NoDefaultModulus,
// UnsupportedField (q < 2 or q > 65536).
FieldPtr field_make(int p, int e, const std::vector<int>* modulus = nullptr);

// Convenience: builds F_q from a prime power q with the default modulus.
// Errors: NotPrimePower for q that is not a prime power.
FieldPtr field_for_order(int q);

}  // namespace grmw
