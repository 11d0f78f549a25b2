#include "pbl/rational.hpp"

#include "pbl/error.hpp"

namespace pbl {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllFormsZero: return "AllFormsZero";
    case ErrorCode::IrregularPencil: return "IrregularPencil";
    case ErrorCode::InternalRankContradiction: return "InternalRankContradiction";
    case ErrorCode::BadT: return "BadT";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotOnHypersurface: return "NotOnHypersurface";
    case ErrorCode::UnsupportedModel: return "UnsupportedModel";
    case ErrorCode::NoImageEquation: return "NoImageEquation";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::AsymmetricUnknown: return "AsymmetricUnknown";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Error";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  mpz_class n, d = 1;
  try {
    if (slash == std::string::npos) {
      n = mpz_class(s, 10);
    } else {
      n = mpz_class(s.substr(0, slash), 10);
      d = mpz_class(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::BadInput, "not a rational: '" + s + "'");
  }
  return Rational(n, d);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (is_integer()) return q_.get_num().get_str();
  return str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::BadInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned exp) {
  Rational r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace pbl
