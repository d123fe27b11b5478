#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ainf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user data.
class InputError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Letter = std::uint16_t;

class Ring {
 public:
  enum class Kind { Integers, Rationals, Modular };

  Ring() = default;
  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  // Throws InputError unless p is prime.
  static Ring modular(std::int64_t p);

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_char2() const { return kind_ == Kind::Modular && modulus_ == 2; }
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, std::int64_t p) : kind_(k), modulus_(p) {}
  Kind kind_ = Kind::Integers;
  std::int64_t modulus_ = 0;
};

// A unit of the form (-1)^e.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign from_parity(long long e) {
    Sign s;
    s.negative_ = (e % 2) != 0;
    return s;
  }
  static constexpr Sign minus() { return from_parity(1); }

  constexpr bool negative() const { return negative_; }
  constexpr int value() const { return negative_ ? -1 : 1; }
  constexpr Sign operator*(Sign o) const { return from_parity(int(negative_) + int(o.negative_)); }
  constexpr Sign& operator*=(Sign o) { return *this = *this * o; }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  bool negative_ = false;
};

// (-1)^{a*b}
constexpr Sign koszul_sign(long long a, long long b) { return Sign::from_parity((a % 2) * (b % 2)); }

// Sign relating s*m(a_1..a_n) to the suspended map on (sa_1..sa_n):
// (-1)^{sum_j (n-j)(|a_j|+1)}, degrees unsuspended.
Sign suspension_sign(std::span<const int> degrees);

class Scalar {
 public:
  Scalar() = default;
  // Reduces into the ring; throws InputError when the value does not live there.
  Scalar(Ring ring, const Rational& value);
  Scalar(Ring ring, long long value) : Scalar(ring, Rational(value)) {}

  static Scalar zero(Ring r) { return Scalar(r, 0); }
  static Scalar one(Ring r) { return Scalar(r, 1); }
  static Scalar of(Ring r, Sign s) { return Scalar(r, s.value()); }
  static Scalar parse(Ring r, std::string_view text);

  const Ring& ring() const { return ring_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar operator*(Sign s) const { return s.negative() ? -*this : *this; }
  // Throws Error when not invertible.
  Scalar inverse() const;

  std::string to_string() const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }

 private:
  void normalize();
  Ring ring_;
  Rational value_ = 0;
};

struct Generator {
  std::string name;
  int degree = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

class GradedBasis {
 public:
  GradedBasis() = default;
  // Names must be unique and non-empty; the unit, if named, must exist and have degree 0.
  explicit GradedBasis(std::vector<Generator> gens, std::optional<std::string> unit = std::nullopt);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  int degree(Letter i) const { return gens_.at(i).degree; }
  const std::string& name(Letter i) const { return gens_.at(i).name; }
  std::optional<Letter> find(std::string_view name) const;
  Letter index_of(std::string_view name) const;
  std::optional<Letter> unit() const { return unit_; }
  std::vector<int> degrees() const;

  // Dual generators in the same order with negated degrees; the unit is dropped.
  GradedBasis dual() const;

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  std::vector<Generator> gens_;
  std::optional<Letter> unit_;
};

std::string dual_name(std::string_view name);

// A basis tensor word. At most one letter is "marked": it comes from the
// bimodule basis instead of the algebra basis.
struct Word {
  std::vector<Letter> letters;
  int mark = -1;
  bool suspended = true;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool marked() const { return mark >= 0; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

Word plain_word(std::vector<Letter> letters, bool suspended = true);
Word marked_word(std::vector<Letter> letters, int mark, bool suspended = true);

// Unsuspended generator degrees plus one per letter when the word is suspended.
long word_degree(const Word& w, const GradedBasis& plain, const GradedBasis* marked = nullptr);

// Effective letter degrees for words of a fixed kind (suspension already applied).
class Grading {
 public:
  Grading() = default;
  Grading(const GradedBasis& plain, const GradedBasis* marked, bool suspended);
  static Grading from_degrees(std::vector<int> plain, std::vector<int> marked = {});

  std::size_t plain_size() const { return plain_.size(); }
  std::size_t marked_size() const { return marked_.size(); }
  int plain(Letter i) const { return plain_[i]; }
  int marked(Letter i) const { return marked_[i]; }
  int letter(const Word& w, std::size_t pos) const {
    return int(pos) == w.mark ? marked_[w.letters[pos]] : plain_[w.letters[pos]];
  }
  long degree(const Word& w) const { return prefix(w, w.size()); }
  long prefix(const Word& w, std::size_t end) const;

 private:
  std::vector<int> plain_;
  std::vector<int> marked_;
};

class Vector {
 public:
  using Terms = std::map<Word, Scalar>;

  Vector() = default;
  explicit Vector(Ring ring) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  void add(const Word& w, const Scalar& c);
  void add(Word&& w, const Scalar& c);
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector operator+(const Vector& o) const { return Vector(*this) += o; }
  Vector operator-(const Vector& o) const { return Vector(*this) -= o; }
  Vector operator*(const Scalar& c) const;
  Vector operator*(Sign s) const;

  friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }

 private:
  Ring ring_;
  Terms terms_;
};

std::string format_word(const Word& w, const GradedBasis& plain, const GradedBasis* marked = nullptr);
std::string format_vector(const Vector& v, const GradedBasis& plain, const GradedBasis* marked = nullptr);

}  // namespace ainf
