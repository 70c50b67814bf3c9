#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfrenorm/exact.hpp"

namespace cfr {

enum class Letter : std::uint8_t { A, B };

inline Letter swap(Letter l) { return l == Letter::A ? Letter::B : Letter::A; }
inline char letter_char(Letter l) { return l == Letter::A ? 'A' : 'B'; }

inline constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

// Run-length encoded word over {A, B}.
class Word {
 public:
  struct Run {
    Letter letter;
    std::uint64_t count;
    friend bool operator==(const Run&, const Run&) = default;
  };

  Word() = default;
  static Word parse(std::string_view text);
  static Word power(Letter l, std::uint64_t count);

  std::uint64_t size() const { return count_[0] + count_[1]; }
  bool empty() const { return size() == 0; }
  std::uint64_t count(Letter l) const { return count_[static_cast<int>(l)]; }
  const std::vector<Run>& runs() const { return runs_; }

  Letter at(std::uint64_t index) const;
  Word prefix(std::uint64_t n) const;
  Word swapped() const;
  std::string str() const;

  Word& append(Letter l, std::uint64_t count = 1);
  Word& append(const Word& w, std::uint64_t limit = kNoLimit);
  // Appends w repeated `times` times, stopping once limit letters are present.
  Word& append_power(const Word& w, const BigInt& times, std::uint64_t limit = kNoLimit);

  friend Word operator+(Word u, const Word& v) { return u.append(v); }
  friend bool operator==(const Word& u, const Word& v) { return u.runs_ == v.runs_; }

 private:
  std::vector<Run> runs_;
  std::array<std::uint64_t, 2> count_{0, 0};
};

// Index of the first position where u and v differ (or the shorter length if one is
// a proper prefix of the other); nullopt when equal.
std::optional<std::uint64_t> first_mismatch(const Word& u, const Word& v);

class SubMatrix {
 public:
  SubMatrix() : SubMatrix(1, 0, 0, 1) {}
  SubMatrix(BigInt a, BigInt b, BigInt c, BigInt d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static SubMatrix identity() { return {}; }

  const BigInt& operator()(int row, int col) const { return m_[2 * row + col]; }
  BigInt det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  BigInt trace() const { return m_[0] + m_[3]; }
  // Column sums: lengths of the images of A and B.
  BigInt column_sum(int col) const { return m_[col] + m_[2 + col]; }
  std::string str() const;

  friend SubMatrix operator*(const SubMatrix& x, const SubMatrix& y);
  friend bool operator==(const SubMatrix&, const SubMatrix&) = default;

 private:
  std::array<BigInt, 4> m_;
};

class Substitution {
 public:
  Substitution() : image_{Word::power(Letter::A, 1), Word::power(Letter::B, 1)} {}
  Substitution(Word image_a, Word image_b) : image_{std::move(image_a), std::move(image_b)} {}

  static Substitution identity() { return {}; }
  static Substitution parse(std::string_view image_a, std::string_view image_b);

  const Word& image(Letter l) const { return image_[static_cast<int>(l)]; }
  // sigma(w), truncated to `limit` letters.
  Word apply(const Word& w, std::uint64_t limit = kNoLimit) const;
  // this o other, with both images truncated to `limit` letters.
  Substitution compose(const Substitution& other, std::uint64_t limit = kNoLimit) const;
  Substitution swapped_letters() const;
  SubMatrix matrix() const;
  std::string str() const;

  friend Substitution operator*(const Substitution& f, const Substitution& g) { return f.compose(g); }
  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::array<Word, 2> image_;
};

}  // namespace cfr
