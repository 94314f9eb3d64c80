#include "frobmark/rational.hpp"

#include "frobmark/error.hpp"

namespace frobmark {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::ValidationError: return "validation-error";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::DimensionError: return "dimension-error";
    case ErrorKind::SizeLimit: return "size-limit-error";
    case ErrorKind::TableInvalid: return "table-invalid";
    case ErrorKind::PreconditionError: return "precondition-error";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::InternalError: return "internal-error";
  }
  return "unknown-error";
}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Int parse_int(const std::string& text) {
  Int out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a decimal integer: '" + text + "'");
  }
  return out;
}

Rat Rat::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Int factorial(unsigned n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::size_t IntHash::operator()(const Int& v) const noexcept {
  // Low limb mixed with size is plenty for hash-set keys.
  const auto* z = v.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  if (z->_mp_size != 0) h ^= static_cast<std::size_t>(z->_mp_d[0]) * 0x9E3779B97F4A7C15ULL;
  return h;
}

}  // namespace frobmark
