#include "cfrenorm/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfr {

namespace {

constexpr std::uint64_t kMaxLetters = std::uint64_t{1} << 62;

}  // namespace

Word Word::parse(std::string_view text) {
  Word w;
  for (char ch : text) {
    if (ch == 'A') w.append(Letter::A);
    else if (ch == 'B') w.append(Letter::B);
    else if (ch != 'e') throw std::invalid_argument("word letters must be A or B");
  }
  return w;
}

Word Word::power(Letter l, std::uint64_t count) {
  Word w;
  w.append(l, count);
  return w;
}

Letter Word::at(std::uint64_t index) const {
  for (const Run& r : runs_) {
    if (index < r.count) return r.letter;
    index -= r.count;
  }
  throw std::out_of_range("word index out of range");
}

Word Word::prefix(std::uint64_t n) const {
  Word w;
  w.append(*this, n);
  return w;
}

Word Word::swapped() const {
  Word w;
  for (const Run& r : runs_) w.append(swap(r.letter), r.count);
  return w;
}

std::string Word::str() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(size(), 1u << 24)));
  for (const Run& r : runs_) out.append(static_cast<std::size_t>(r.count), letter_char(r.letter));
  return out;
}

Word& Word::append(Letter l, std::uint64_t count) {
  if (count == 0) return *this;
  if (count > kMaxLetters - size()) throw std::length_error("word too long");
  if (!runs_.empty() && runs_.back().letter == l) runs_.back().count += count;
  else runs_.push_back({l, count});
  count_[static_cast<int>(l)] += count;
  return *this;
}

Word& Word::append(const Word& w, std::uint64_t limit) {
  for (const Run& r : w.runs_) {
    if (size() >= limit) break;
    append(r.letter, std::min(r.count, limit - size()));
  }
  return *this;
}

Word& Word::append_power(const Word& w, const BigInt& times, std::uint64_t limit) {
  if (w.empty() || times <= 0) return *this;
  if (w.runs_.size() == 1) {
    BigInt total = times * static_cast<unsigned long>(w.size());
    BigInt room(static_cast<unsigned long>(limit - std::min(limit, size())));
    if (total > room) total = room;
    if (total > static_cast<unsigned long>(kMaxLetters)) throw std::length_error("word too long");
    return append(w.runs_.front().letter, total.get_ui());
  }
  for (BigInt t = times; t > 0 && size() < limit; --t) append(w, limit);
  return *this;
}

std::optional<std::uint64_t> first_mismatch(const Word& u, const Word& v) {
  std::size_t i = 0, j = 0;
  std::uint64_t ri = 0, rj = 0;  // letters consumed inside current runs
  std::uint64_t pos = 0;
  const auto& a = u.runs();
  const auto& b = v.runs();
  while (i < a.size() && j < b.size()) {
    if (a[i].letter != b[j].letter) return pos;
    std::uint64_t step = std::min(a[i].count - ri, b[j].count - rj);
    pos += step;
    ri += step;
    rj += step;
    if (ri == a[i].count) ++i, ri = 0;
    if (rj == b[j].count) ++j, rj = 0;
  }
  if (i == a.size() && j == b.size()) return std::nullopt;
  return pos;
}

std::string SubMatrix::str() const {
  return "[[" + m_[0].get_str() + "," + m_[1].get_str() + "],[" + m_[2].get_str() + "," +
         m_[3].get_str() + "]]";
}

SubMatrix operator*(const SubMatrix& x, const SubMatrix& y) {
  const auto& a = x.m_;
  const auto& b = y.m_;
  return SubMatrix(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                   a[2] * b[1] + a[3] * b[3]);
}

Substitution Substitution::parse(std::string_view image_a, std::string_view image_b) {
  return Substitution(Word::parse(image_a), Word::parse(image_b));
}

Word Substitution::apply(const Word& w, std::uint64_t limit) const {
  Word out;
  for (const Word::Run& r : w.runs()) {
    if (out.size() >= limit) break;
    out.append_power(image(r.letter), BigInt(static_cast<unsigned long>(r.count)), limit);
  }
  return out;
}

Substitution Substitution::compose(const Substitution& other, std::uint64_t limit) const {
  return Substitution(apply(other.image(Letter::A), limit), apply(other.image(Letter::B), limit));
}

Substitution Substitution::swapped_letters() const {
  return Substitution(image_[0].swapped(), image_[1].swapped());
}

SubMatrix Substitution::matrix() const {
  auto count = [](const Word& w, Letter l) { return BigInt(static_cast<unsigned long>(w.count(l))); };
  return SubMatrix(count(image_[0], Letter::A), count(image_[1], Letter::A),
                   count(image_[0], Letter::B), count(image_[1], Letter::B));
}

std::string Substitution::str() const {
  auto show = [](const Word& w) { return w.empty() ? std::string("e") : w.str(); };
  return "A->" + show(image_[0]) + ", B->" + show(image_[1]);
}

}  // namespace cfr
