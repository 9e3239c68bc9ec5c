#include "braidcover/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "braidcover/error.hpp"

namespace braidcover {

namespace {

void push_reduced(std::vector<int>& word, int letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

void append_inverse(std::vector<int>& word, std::span<const int> piece) {
  for (auto it = piece.rbegin(); it != piece.rend(); ++it) {
    push_reduced(word, -*it);
  }
}

std::string join(std::span<const int> letters) {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ' ';
    os << letters[k];
  }
  return os.str();
}

// One Artin substitution applied to an already reduced word.
std::vector<int> substitute(std::span<const int> word, int braid_letter) {
  const int i = std::abs(braid_letter);
  const bool positive = braid_letter > 0;
  std::vector<int> out;
  out.reserve(word.size() + 4);
  for (const int letter : word) {
    const int g = std::abs(letter);
    int image[3];
    std::size_t len = 1;
    if (g == i) {
      if (positive) {
        image[0] = i;
        image[1] = i + 1;
        image[2] = -i;
        len = 3;
      } else {
        image[0] = i + 1;
      }
    } else if (g == i + 1) {
      if (positive) {
        image[0] = i;
      } else {
        image[0] = -(i + 1);
        image[1] = i;
        image[2] = i + 1;
        len = 3;
      }
    } else {
      image[0] = g;
    }
    const std::span<const int> piece(image, len);
    if (letter > 0) {
      for (const int x : piece) push_reduced(out, x);
    } else {
      append_inverse(out, piece);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- BraidWord

BraidWord::BraidWord(std::size_t strand_count, std::vector<int> letters)
    : strands_(strand_count), letters_(std::move(letters)) {
  if (strand_count < 1) {
    throw Error(ErrorKind::InvalidArgument, "strand count must be >= 1");
  }
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const int i = std::abs(letters_[k]);
    if (i < 1 || static_cast<std::size_t>(i) >= strands_) {
      throw Error(ErrorKind::InvalidArgument,
                  "braid letter " + std::to_string(letters_[k]) +
                      " out of range for " + std::to_string(strands_) +
                      " strands",
                  k + 1);
    }
  }
}

BraidWord BraidWord::generator(std::size_t strand_count, int index, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  }
  return BraidWord(strand_count, {sign * index});
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& x : out) x = -x;
  BraidWord w;
  w.strands_ = strands_;
  w.letters_ = std::move(out);
  return w;
}

BraidWord BraidWord::then(const BraidWord& next) const {
  if (next.strands_ != strands_) {
    throw Error(ErrorKind::InvalidArgument, "strand count mismatch");
  }
  BraidWord w = *this;
  w.letters_.insert(w.letters_.end(), next.letters_.begin(),
                    next.letters_.end());
  return w;
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord w;
  w.strands_ = strands_;
  for (const int x : letters_) push_reduced(w.letters_, x);
  return w;
}

std::string BraidWord::to_string() const { return join(letters_); }

BraidWord parse_braid_word(std::string_view text, std::size_t strand_count) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == ',')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' &&
           text[end] != '\n' && text[end] != ',') {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "cannot parse braid letter '" +
                      std::string(text.substr(pos, end - pos)) + "'",
                  letters.size() + 1);
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strand_count, std::move(letters));
}

// ----------------------------------------------------------------- FreeWord

FreeWord::FreeWord(std::size_t generator_count, std::vector<int> letters)
    : rank_(generator_count), letters_(std::move(letters)) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const int g = std::abs(letters_[k]);
    if (g < 1 || static_cast<std::size_t>(g) > rank_) {
      throw Error(ErrorKind::InvalidArgument,
                  "free generator " + std::to_string(letters_[k]) +
                      " out of range for rank " + std::to_string(rank_),
                  k + 1);
    }
  }
  reduce();
}

FreeWord FreeWord::generator(std::size_t generator_count, int index) {
  return FreeWord(generator_count, {index});
}

void FreeWord::reduce() {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const int x : letters_) push_reduced(out, x);
  letters_ = std::move(out);
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.rank_ = rank_;
  append_inverse(w.letters_, letters_);
  return w;
}

FreeWord FreeWord::then(const FreeWord& next) const {
  if (next.rank_ != rank_) {
    throw Error(ErrorKind::InvalidArgument, "free group rank mismatch");
  }
  FreeWord w = *this;
  for (const int x : next.letters_) push_reduced(w.letters_, x);
  return w;
}

std::string FreeWord::to_string() const { return join(letters_); }

// ------------------------------------------------------------ BandGenerator

BraidWord BandGenerator::word() const {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::InvalidArgument, "band sign must be +1 or -1");
  }
  return conjugator.inverse()
      .then(BraidWord::generator(strand_count(), core, sign))
      .then(conjugator);
}

MonodromyTuple::MonodromyTuple(std::size_t strand_count,
                               std::vector<BandGenerator> bands)
    : strands_(strand_count), bands_(std::move(bands)) {
  for (std::size_t k = 0; k < bands_.size(); ++k) {
    const auto& b = bands_[k];
    if (b.strand_count() != strands_) {
      throw Error(ErrorKind::InvalidArgument,
                  "band lives on " + std::to_string(b.strand_count()) +
                      " strands, tuple on " + std::to_string(strands_),
                  k + 1);
    }
    if (b.core < 1 || static_cast<std::size_t>(b.core) >= strands_ ||
        (b.sign != 1 && b.sign != -1)) {
      throw Error(ErrorKind::InvalidArgument, "invalid band core or sign",
                  k + 1);
    }
  }
}

const BandGenerator& MonodromyTuple::band(std::size_t position) const {
  if (position < 1 || position > bands_.size()) {
    throw Error(ErrorKind::InvalidArgument, "band position out of range",
                position);
  }
  return bands_[position - 1];
}

BraidWord MonodromyTuple::product() const {
  BraidWord out(strands_);
  for (const auto& b : bands_) out = out.then(b.word());
  return out;
}

// --------------------------------------------------------------- operations

Permutation perm_of(const BraidWord& b) {
  Permutation p(b.strand_count());
  for (const int x : b.letters()) {
    const int i = std::abs(x);
    p = p.then(Permutation::transposition(b.strand_count(), i, i + 1));
  }
  return p;
}

FreeWord artin_apply(const BraidWord& b, const FreeWord& x) {
  if (x.generator_count() != b.strand_count()) {
    throw Error(ErrorKind::InvalidArgument,
                "free word has " + std::to_string(x.generator_count()) +
                    " generators, braid has " +
                    std::to_string(b.strand_count()) + " strands");
  }
  std::vector<int> word(x.letters().begin(), x.letters().end());
  for (const int letter : b.letters()) word = substitute(word, letter);
  return FreeWord(x.generator_count(), std::move(word));
}

BraidWord tau(int i, int j, std::size_t strand_count, bool barred) {
  if (i < 1 || j <= i || static_cast<std::size_t>(j) > strand_count) {
    throw Error(ErrorKind::InvalidArgument,
                "tau(" + std::to_string(i) + "," + std::to_string(j) +
                    ") needs 1 <= i < j <= " + std::to_string(strand_count));
  }
  std::vector<int> conj;
  for (int k = i + 1; k < j; ++k) conj.push_back(barred ? -k : k);
  const BraidWord c(strand_count, std::move(conj));
  return c.inverse().then(BraidWord::generator(strand_count, i)).then(c);
}

int exponent_sum(const BraidWord& b) noexcept {
  int total = 0;
  for (const int x : b.letters()) total += x > 0 ? 1 : -1;
  return total;
}

MonodromyTuple hurwitz_move(const MonodromyTuple& t, std::size_t k,
                            HurwitzDirection direction) {
  if (k < 1 || k + 1 > t.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "Hurwitz position must satisfy 1 <= k <= n-1", k);
  }
  std::vector<BandGenerator> bands = t.bands();
  BandGenerator& left = bands[k - 1];
  BandGenerator& right = bands[k];
  if (direction == HurwitzDirection::Forward) {
    BandGenerator moved{left.conjugator.then(right.word()).freely_reduced(),
                        left.core, left.sign};
    left = right;
    right = std::move(moved);
  } else {
    BandGenerator moved{
        right.conjugator.then(left.word().inverse()).freely_reduced(),
        right.core, right.sign};
    right = left;
    left = std::move(moved);
  }
  return MonodromyTuple(t.strand_count(), std::move(bands));
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count()) return false;
  // Freely equal words are equal; only the remaining cases need the action,
  // whose images can grow exponentially with word length.
  if (a.freely_reduced() == b.freely_reduced()) return true;
  const std::size_t m = a.strand_count();
  for (std::size_t i = 1; i <= m; ++i) {
    const auto g = FreeWord::generator(m, static_cast<int>(i));
    if (artin_apply(a, g) != artin_apply(b, g)) return false;
  }
  return true;
}

}  // namespace braidcover
