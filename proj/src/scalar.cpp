#include "stx/scalar.hpp"

namespace stx {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_reduce(long long n, std::uint64_t p) {
  long long m = n % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

// p < 2^31, so products fit in 64 bits.
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 64-bit; p prime
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw NotInvertibleError("element not invertible mod " + std::to_string(p));
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw InputError("prime modulus too large (must be < 2^31): " + std::to_string(p));
  if (!is_prime_u64(p)) throw InputError("modulus is not prime: " + std::to_string(p));
  return Field(FieldKind::Prime, p);
}

std::string Field::to_string() const {
  return kind_ == FieldKind::Rationals ? "QQ" : "FP " + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
  if (f.kind() == FieldKind::Rationals) return Scalar(f, mpq_class(0));
  return Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const Field& f) {
  if (f.kind() == FieldKind::Rationals) return Scalar(f, mpq_class(1));
  return Scalar(f, std::uint64_t{1});
}

Scalar Scalar::of(const Field& f, long long n) {
  if (f.kind() == FieldKind::Rationals) {
    mpq_class q;
    q = static_cast<long>(n);
    return Scalar(f, q);
  }
  return Scalar(f, mod_reduce(n, f.modulus()));
}

Scalar Scalar::fraction(const Field& f, long long num, long long den) {
  if (den == 0) throw NotInvertibleError("fraction with zero denominator");
  if (f.kind() == FieldKind::Rationals) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(f, q);
  }
  std::uint64_t d = mod_reduce(den, f.modulus());
  if (d == 0)
    throw NotInvertibleError("denominator " + std::to_string(den) + " vanishes mod " +
                             std::to_string(f.modulus()));
  return Scalar(f, mod_mul(mod_reduce(num, f.modulus()), mod_inv(d, f.modulus()), f.modulus()));
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw UsageError("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const {
  if (field_.kind() == FieldKind::Rationals) return sgn(rat()) == 0;
  return rep() == 0;
}

bool Scalar::is_one() const {
  if (field_.kind() == FieldKind::Rationals) return rat() == 1;
  return rep() == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (field_.kind() == FieldKind::Rationals) return Scalar(field_, mpq_class(rat() + o.rat()));
  return Scalar(field_, (rep() + o.rep()) % field_.modulus());
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  if (field_.kind() == FieldKind::Rationals) return Scalar(field_, mpq_class(rat() - o.rat()));
  return Scalar(field_, (rep() + field_.modulus() - o.rep()) % field_.modulus());
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (field_.kind() == FieldKind::Rationals) return Scalar(field_, mpq_class(rat() * o.rat()));
  return Scalar(field_, mod_mul(rep(), o.rep(), field_.modulus()));
}

Scalar Scalar::negated() const {
  if (field_.kind() == FieldKind::Rationals) return Scalar(field_, mpq_class(-rat()));
  return Scalar(field_, rep() == 0 ? 0 : field_.modulus() - rep());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertibleError("zero is not invertible");
  if (field_.kind() == FieldKind::Rationals) return Scalar(field_, mpq_class(1 / rat()));
  return Scalar(field_, mod_inv(rep(), field_.modulus()));
}

bool Scalar::operator==(const Scalar& o) const {
  require_same(o);
  if (field_.kind() == FieldKind::Rationals) return rat() == o.rat();
  return rep() == o.rep();
}

int Scalar::cmp(const Scalar& o) const {
  require_same(o);
  if (field_.kind() == FieldKind::Rationals) {
    int c = ::cmp(rat(), o.rat());
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  return rep() < o.rep() ? -1 : rep() > o.rep() ? 1 : 0;
}

bool Scalar::leading_minus() const {
  return field_.kind() == FieldKind::Rationals && sgn(rat()) < 0;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::Rationals) return rat().get_str();
  return std::to_string(rep());
}

std::string Scalar::magnitude_string() const {
  if (field_.kind() == FieldKind::Rationals) return mpq_class(abs(rat())).get_str();
  return std::to_string(rep());
}

}  // namespace stx
