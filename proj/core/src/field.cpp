#include "waring/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace waring {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonSplitApolar: return "NonSplitApolar";
    case ErrorCode::NoSplitWitness: return "NoSplitWitness";
    case ErrorCode::FamilyEmpty: return "FamilyEmpty";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::NotMinimalCertificate: return "NotMinimalCertificate";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::CurveTooSmall: return "CurveTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) -> std::uint64_t {
    std::uint64_t acc = 1;
    a %= n;
    while (e) {
      if (e & 1) acc = mulmod(acc, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return acc;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 3 || p >= (1ull << 32) || !is_prime_u64(p))
    fail(ErrorCode::InvalidArgument,
         "prime field modulus must be an odd prime below 2^32, got " +
             std::to_string(p));
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

namespace fp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mul(acc, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) fail(ErrorCode::InvalidArgument, "division by zero mod p");
  return pow(a, p - 2, p);
}

bool sqrt(std::uint64_t a, std::uint64_t p, std::uint64_t& root) {
  a %= p;
  if (a == 0) {
    root = 0;
    return true;
  }
  if (pow(a, (p - 1) / 2, p) != 1) return false;
  if (p % 4 == 3) {
    root = pow(a, (p + 1) / 4, p);
    return true;
  }
  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow(z, q, p);
  std::uint64_t t = pow(a, q, p);
  std::uint64_t r = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2, p);
      ++i;
    }
    std::uint64_t b = pow(c, 1ull << (m - i - 1), p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  root = r;
  return true;
}

}  // namespace fp

Scalar Scalar::from_int(long long n, const FieldSpec& field) {
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = BigRat(n);
  } else {
    long long m = n % static_cast<long long>(field.p());
    if (m < 0) m += static_cast<long long>(field.p());
    s.v_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_rational(const BigRat& q, const FieldSpec& field) {
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = q;
    return s;
  }
  const BigInt p(field.p());
  BigInt num = boost::multiprecision::numerator(q) % p;
  BigInt den = boost::multiprecision::denominator(q) % p;
  if (num < 0) num += p;
  if (den == 0)
    fail(ErrorCode::InvalidArgument, "denominator divisible by p");
  std::uint64_t n = num.convert_to<std::uint64_t>();
  std::uint64_t d = den.convert_to<std::uint64_t>();
  s.v_ = fp::mul(n, fp::inv(d, field.p()), field.p());
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return from_rational(BigRat(BigInt(text)), field);
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return from_rational(BigRat(num, den), field);
  } catch (const std::runtime_error& e) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad scalar literal '" + text + "'");
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_.is_zero() : v_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : v_ == 1;
}

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    fail(ErrorCode::FieldMismatch, "operands from different fields");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(*this, rhs);
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = q_ + rhs.q_;
  else
    out.v_ = fp::add(v_, rhs.v_, field_.p());
  return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  require_same_field(*this, rhs);
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = q_ - rhs.q_;
  else
    out.v_ = fp::sub(v_, rhs.v_, field_.p());
  return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(*this, rhs);
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = q_ * rhs.q_;
  else
    out.v_ = fp::mul(v_, rhs.v_, field_.p());
  return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = -q_;
  else
    out.v_ = v_ == 0 ? 0 : field_.p() - v_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  Scalar out(field_);
  if (field_.is_rational())
    out.q_ = 1 / q_;
  else
    out.v_ = fp::inv(v_, field_.p());
  return out;
}

bool Scalar::operator==(const Scalar& rhs) const {
  require_same_field(*this, rhs);
  return field_.is_rational() ? q_ == rhs.q_ : v_ == rhs.v_;
}

int Scalar::canonical_cmp(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) {
    if (a.v_ != b.v_) return a.v_ < b.v_ ? -1 : 1;
    return 0;
  }
  const BigInt& an = boost::multiprecision::numerator(a.q_);
  const BigInt& bn = boost::multiprecision::numerator(b.q_);
  if (an != bn) return an < bn ? -1 : 1;
  const BigInt& ad = boost::multiprecision::denominator(a.q_);
  const BigInt& bd = boost::multiprecision::denominator(b.q_);
  if (ad != bd) return ad < bd ? -1 : 1;
  return 0;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(v_);
  const BigInt& num = boost::multiprecision::numerator(q_);
  const BigInt& den = boost::multiprecision::denominator(q_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace waring
