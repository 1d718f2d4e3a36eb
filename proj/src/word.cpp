#include "fi1/word.hpp"

#include <algorithm>
#include <cctype>

#include "fi1/errors.hpp"

namespace fi1 {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw DomainError("words must be nonempty");
  }
}

Word Word::power_of_x(std::int64_t k) {
  if (k == 0) {
    throw DomainError("x^0 is not a word");
  }
  Letter const l = k > 0 ? Letter::X : Letter::XInv;
  return Word(std::vector<Letter>(static_cast<std::size_t>(k > 0 ? k : -k), l));
}

Word Word::operator+(Word const& other) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact.push_back(c);
    }
  }
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < compact.size()) {
    char const c = compact[i];
    if (c == 'X') {
      letters.push_back(Letter::XInv);
      ++i;
    } else if (c == 'x') {
      if (compact.compare(i, 4, "x^-1") == 0) {
        letters.push_back(Letter::XInv);
        i += 4;
      } else {
        letters.push_back(Letter::X);
        ++i;
      }
    } else {
      throw DomainError("unexpected character '" + std::string(1, c)
                        + "' in word");
    }
  }
  if (letters.empty()) {
    throw DomainError("words must be nonempty");
  }
  return Word(std::move(letters));
}

std::string to_string(Word const& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    out.push_back(l == Letter::X ? 'x' : 'X');
  }
  return out;
}

Element eval_word(Word const& w) {
  std::int64_t sum = 0, lo = 0, hi = 0;
  for (Letter l : w.letters()) {
    sum += l == Letter::X ? 1 : -1;
    lo = std::min(lo, sum);
    hi = std::max(hi, sum);
  }
  return Element(-lo, sum, hi);
}

Word canonical_word(Element const& e) {
  std::vector<Letter> out;
  auto append = [&out](Letter l, std::int64_t count) {
    out.insert(out.end(), static_cast<std::size_t>(count), l);
  };
  append(Letter::XInv, e.left());
  append(Letter::X, e.left());
  append(Letter::X, e.right());
  append(Letter::XInv, e.right());
  if (e.shift() > 0) {
    append(Letter::X, e.shift());
  } else {
    append(Letter::XInv, -e.shift());
  }
  return Word(std::move(out));
}

}  // namespace fi1
