#include "posetcoh/field.hpp"

#include <cctype>

namespace posetcoh {

Field Field::prime_field(long p) {
  if (p < 2) throw input_error("BadField", "field characteristic must be a prime >= 2");
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw input_error("BadField", "not a prime: " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& tag) {
  if (tag == "Q") return rationals();
  if (tag.rfind("Fp:", 0) == 0) {
    const std::string num = tag.substr(3);
    if (num.empty()) throw input_error("BadField", "missing characteristic in tag '" + tag + "'");
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw input_error("BadField", "bad field tag '" + tag + "'");
    return prime_field(std::stol(num));
  }
  throw input_error("BadField", "unknown field tag '" + tag + "' (expected \"Q\" or \"Fp:p\")");
}

std::string Field::tag() const {
  return is_rationals() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

mpq_class Field::canonical(const mpq_class& v) const {
  if (is_rationals()) {
    mpq_class r = v;
    r.canonicalize();
    return r;
  }
  // Residue of a rational with denominator invertible mod p.
  mpz_class p(p_);
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw input_error("BadScalar", "denominator not invertible mod " + std::to_string(p_));
  mpz_class r = (num * dinv) % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  return canonical(mpq_class(a + b));
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  return canonical(mpq_class(a - b));
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  return canonical(mpq_class(a * b));
}

mpq_class Field::neg(const mpq_class& a) const { return canonical(mpq_class(-a)); }

mpq_class Field::inv(const mpq_class& a) const {
  if (a == 0) throw Error("DivisionByZero", "inverting zero in " + tag());
  if (is_rationals()) return mpq_class(1 / a);
  mpz_class p(p_);
  mpz_class num = a.get_num();
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("DivisionByZero", "non-invertible residue in " + tag());
  return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

Scalar parse_scalar(const Field& field, const std::string& text) {
  mpq_class v;
  try {
    v = mpq_class(text);
  } catch (const std::invalid_argument&) {
    throw input_error("BadScalar", "cannot parse scalar '" + text + "'");
  }
  if (v.get_den() == 0) throw input_error("BadScalar", "zero denominator in '" + text + "'");
  return Scalar{field, field.canonical(v)};
}

std::string scalar_to_string(const mpq_class& value) { return value.get_str(); }

}  // namespace posetcoh
