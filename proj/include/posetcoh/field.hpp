#pragma once

#include <gmpxx.h>

#include <string>

#include "posetcoh/errors.hpp"

namespace posetcoh {

// An exact coefficient field: the rationals, or the prime field F_p.
// Tag strings are "Q" and "Fp:<p>".
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }

  static Field prime_field(long p);

  static Field parse(const std::string& tag);

  bool is_rationals() const { return p_ == 0; }
  long characteristic() const { return p_; }

  std::string tag() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

  // Canonical representative: reduced fraction for Q, residue in [0,p) for F_p.
  mpq_class canonical(const mpq_class& v) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;  // throws on zero
  mpq_class div(const mpq_class& a, const mpq_class& b) const;

  mpq_class from_long(long v) const { return canonical(mpq_class(v)); }

 private:
  long p_ = 0;  // 0 means Q
};

struct Scalar {
  Field field;
  mpq_class value;
};

// Parses "a/b" or "a" (decimal integers) into a canonical scalar.
Scalar parse_scalar(const Field& field, const std::string& text);

std::string scalar_to_string(const mpq_class& value);

}  // namespace posetcoh
