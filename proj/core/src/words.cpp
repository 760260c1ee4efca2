#include "skewalex/words.hpp"

#include <algorithm>
#include <cctype>

#include "skewalex/errors.hpp"

namespace skewalex {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) out.pop_back();
  else out.push_back(l);
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) push_reduced(letters_, l);
}

Word Word::generator(int index, int sign) { return Word({Letter{index, sign}}); }

Word Word::parse(const std::string& text, const std::vector<std::string>& names) {
  const auto eq = text.find('=');
  if (eq != std::string::npos) {
    const Word lhs = parse(text.substr(0, eq), names);
    const Word rhs = parse(text.substr(eq + 1), names);
    return lhs * rhs.inverse();
  }
  std::vector<Letter> letters;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const int sign = std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1;
    int idx = -1;
    for (size_t g = 0; g < names.size(); ++g)
      if (names[g].size() == 1 && names[g][0] == lower) {
        idx = static_cast<int>(g);
        break;
      }
    if (idx < 0) throw ParseError(std::string("unknown generator letter '") + ch + "'");
    push_reduced(letters, Letter{idx, sign});
  }
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  for (const Letter& l : o.letters_) push_reduced(r.letters_, l);
  return r;
}

Word Word::inverse() const {
  Word r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(Letter{it->gen, -it->sign});
  return r;
}

Word Word::reversed() const {
  Word r;
  r.letters_.assign(letters_.rbegin(), letters_.rend());
  return r;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    std::string n = names[l.gen];
    if (l.sign < 0)
      std::transform(n.begin(), n.end(), n.begin(),
                     [](unsigned char c) { return std::toupper(c); });
    s += n;
  }
  return s;
}

GroupRingElem GroupRingElem::from_word(const Word& w, std::int64_t coeff) {
  GroupRingElem e;
  e.add_term(w, coeff);
  return e;
}

void GroupRingElem::add_term(const Word& w, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) terms_.emplace(w, c);
  else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
  GroupRingElem r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
  GroupRingElem r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
  GroupRingElem r;
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_) r.add_term(u * v, cu * cv);
  return r;
}

GroupRingElem fox_derivative(const Word& w, int gen) {
  // d(l_1 ... l_k)/dx = sum_i (l_1 ... l_{i-1}) d(l_i)/dx
  GroupRingElem result;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.sign > 0) {
        result.add_term(prefix, 1);
      } else {
        result.add_term(prefix * Word::generator(l.gen, -1), -1);
      }
    }
    prefix = prefix * Word({l});
  }
  return result;
}

GroupRingElem fox_derivative_right(const Word& w, int gen) {
  // d'(l_1 ... l_k) = sum_i d'(l_i) (l_{i+1} ... l_k)
  GroupRingElem result;
  Word suffix;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (it->gen == gen) {
      if (it->sign > 0) {
        result.add_term(suffix, 1);
      } else {
        result.add_term(Word::generator(it->gen, -1) * suffix, -1);
      }
    }
    suffix = Word({*it}) * suffix;
  }
  return result;
}

}  // namespace skewalex
