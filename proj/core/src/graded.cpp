#include "ainf/graded.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace ainf {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Integer mod_floor(const Integer& a, std::int64_t p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

Integer mod_inverse(const Integer& a, std::int64_t p) {
  // Fermat; p is prime.
  Integer base = mod_floor(a, p), result = 1;
  std::int64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Ring Ring::modular(std::int64_t p) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  return Ring(Kind::Modular, p);
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Modular: return "Z/" + std::to_string(modulus_);
  }
  return "?";
}

Sign suspension_sign(std::span<const int> degrees) {
  const long long n = static_cast<long long>(degrees.size());
  long long e = 0;
  for (long long j = 1; j <= n; ++j) e += (n - j) * (degrees[j - 1] + 1);
  return Sign::from_parity(e < 0 ? -e : e);
}

Scalar::Scalar(Ring ring, const Rational& value) : ring_(ring), value_(value) { normalize(); }

void Scalar::normalize() {
  switch (ring_.kind()) {
    case Ring::Kind::Rationals: return;
    case Ring::Kind::Integers:
      if (denominator(value_) != 1) throw InputError("coefficient " + value_.str() + " is not an integer");
      return;
    case Ring::Kind::Modular: {
      const std::int64_t p = ring_.modulus();
      Integer num = numerator(value_), den = denominator(value_);
      if (den % p == 0) throw InputError("coefficient " + value_.str() + " has denominator divisible by the modulus");
      value_ = Rational(mod_floor(mod_floor(num, p) * mod_inverse(den, p), p));
      return;
    }
  }
}

Scalar Scalar::parse(Ring r, std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (num.starts_with('+')) num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.starts_with('-'))
    throw InputError("malformed coefficient '" + std::string(text) + "'");
  Integer n(num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Scalar(r, Rational(n, d));
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!(ring_ == o.ring_)) throw Error("ring mismatch");
  return Scalar(ring_, value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (!(ring_ == o.ring_)) throw Error("ring mismatch");
  return Scalar(ring_, value_ - o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (!(ring_ == o.ring_)) throw Error("ring mismatch");
  return Scalar(ring_, value_ * o.value_);
}

Scalar Scalar::operator-() const { return Scalar(ring_, -value_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (ring_.kind() == Ring::Kind::Integers && value_ != 1 && value_ != -1)
    throw Error(value_.str() + " is not a unit of Z");
  return Scalar(ring_, Rational(1) / value_);
}

std::string Scalar::to_string() const { return value_.str(); }

GradedBasis::GradedBasis(std::vector<Generator> gens, std::optional<std::string> unit) : gens_(std::move(gens)) {
  if (gens_.size() > 0xFFFF) throw InputError("basis too large");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw InputError("empty generator name");
    if (!seen.insert(g.name).second) throw InputError("duplicate generator '" + g.name + "'");
  }
  if (unit) {
    auto u = find(*unit);
    if (!u) throw InputError("unit '" + *unit + "' is not a generator");
    if (gens_[*u].degree != 0) throw InputError("unit '" + *unit + "' must have degree 0");
    unit_ = u;
  }
}

std::optional<Letter> GradedBasis::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter GradedBasis::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown generator '" + std::string(name) + "'");
  return *i;
}

std::vector<int> GradedBasis::degrees() const {
  std::vector<int> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.degree);
  return out;
}

std::string dual_name(std::string_view name) {
  if (name.size() > 1 && name.back() == '*') return std::string(name.substr(0, name.size() - 1));
  return std::string(name) + "*";
}

GradedBasis GradedBasis::dual() const {
  std::vector<Generator> d;
  d.reserve(gens_.size());
  for (const auto& g : gens_) d.push_back({dual_name(g.name), -g.degree});
  return GradedBasis(std::move(d));
}

Word plain_word(std::vector<Letter> letters, bool suspended) { return Word{std::move(letters), -1, suspended}; }

Word marked_word(std::vector<Letter> letters, int mark, bool suspended) {
  if (mark < 0 || mark >= static_cast<int>(letters.size())) throw ArityError("mark out of range");
  return Word{std::move(letters), mark, suspended};
}

long word_degree(const Word& w, const GradedBasis& plain, const GradedBasis* marked) {
  long d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (static_cast<int>(i) == w.mark) {
      if (!marked) throw ArityError("marked word without a marked basis");
      d += marked->degree(w.letters[i]);
    } else {
      d += plain.degree(w.letters[i]);
    }
  }
  if (w.suspended) d += static_cast<long>(w.size());
  return d;
}

Grading::Grading(const GradedBasis& plain, const GradedBasis* marked, bool suspended) {
  const int shift = suspended ? 1 : 0;
  for (const auto& g : plain.generators()) plain_.push_back(g.degree + shift);
  if (marked)
    for (const auto& g : marked->generators()) marked_.push_back(g.degree + shift);
}

Grading Grading::from_degrees(std::vector<int> plain, std::vector<int> marked) {
  Grading g;
  g.plain_ = std::move(plain);
  g.marked_ = std::move(marked);
  return g;
}

long Grading::prefix(const Word& w, std::size_t end) const {
  long d = 0;
  for (std::size_t i = 0; i < end; ++i) d += letter(w, i);
  return d;
}

Scalar Vector::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void Vector::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Vector::add(Word&& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Vector& Vector::operator+=(const Vector& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Vector Vector::operator*(const Scalar& c) const {
  Vector out(ring_);
  for (const auto& [w, x] : terms_) out.add(w, x * c);
  return out;
}

Vector Vector::operator*(Sign s) const {
  if (!s.negative()) return *this;
  Vector out(ring_);
  for (const auto& [w, x] : terms_) out.terms_.emplace(w, -x);
  return out;
}

std::string format_word(const Word& w, const GradedBasis& plain, const GradedBasis* marked) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    const bool is_mark = static_cast<int>(i) == w.mark;
    const std::string& n = is_mark && marked ? marked->name(w.letters[i]) : plain.name(w.letters[i]);
    if (w.suspended) os << 's';
    if (is_mark) os << '[' << n << ']';
    else os << n;
  }
  os << ')';
  return os.str();
}

std::string format_vector(const Vector& v, const GradedBasis& plain, const GradedBasis* marked) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << "*" << format_word(w, plain, marked);
  }
  return os.str();
}

}  // namespace ainf
