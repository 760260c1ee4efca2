#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skewalex {

/// One letter of a free-group word: generator index and sign +-1.
struct Letter {
  int gen = 0;
  int sign = 1;
  bool operator==(const Letter& o) const = default;
  auto operator<=>(const Letter& o) const = default;
};

/// Freely reduced word in a free group.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word generator(int index, int sign = 1);
  /// Case-convention syntax: lowercase letters are generators, uppercase
  /// their inverses ("abAB"). An optional "lhs=rhs" spelling parses as
  /// lhs * rhs^-1. Single-letter generator names only.
  static Word parse(const std::string& text, const std::vector<std::string>& generator_names);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  /// Letters in reverse order with signs kept (an anti-automorphism fixing
  /// the generators).
  Word reversed() const;

  bool operator==(const Word& o) const = default;
  auto operator<=>(const Word& o) const = default;

  std::string to_string(const std::vector<std::string>& generator_names) const;

private:
  std::vector<Letter> letters_;
};

/// Element of the integral group ring Z[F] of the free group, as a formal
/// sum of words.
class GroupRingElem {
public:
  GroupRingElem() = default;
  static GroupRingElem zero() { return GroupRingElem(); }
  static GroupRingElem one() { return from_word(Word()); }
  static GroupRingElem from_word(const Word& w, std::int64_t coeff = 1);

  const std::map<Word, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElem operator+(const GroupRingElem& o) const;
  GroupRingElem operator-(const GroupRingElem& o) const;
  GroupRingElem operator*(const GroupRingElem& o) const;
  GroupRingElem operator-() const;
  bool operator==(const GroupRingElem& o) const = default;

  void add_term(const Word& w, std::int64_t c);

private:
  std::map<Word, std::int64_t> terms_;
};

///左 Fox derivative: d(uv) = du + u dv, d(x_j)/d(x_j) = 1,
/// d(x_j^-1)/d(x_j) = -x_j^-1. Satisfies
/// sum_j (dw/dx_j)(x_j - 1) = w - 1 in Z[F].
GroupRingElem fox_derivative(const Word& w, int gen);

/// Mirrored derivative d'(uv) = d'(u) v + d'(v); equals
/// rev o fox_derivative o rev and satisfies sum_j (x_j - 1) d'_j(w) = w - 1.
/// This is the Jacobian used for boundary matrices in the column-vector
/// convention.
GroupRingElem fox_derivative_right(const Word& w, int gen);

}  // namespace skewalex
