#include "braidcover/permutation.hpp"

#include <numeric>
#include <sstream>

#include "braidcover/error.hpp"

namespace braidcover {

Permutation::Permutation(std::size_t degree) : image_(degree) {
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation p;
  p.image_.resize(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int v = images[k];
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || hit[v - 1]) {
      throw Error(ErrorKind::InvalidArgument, "images do not form a bijection",
                  k + 1);
    }
    hit[v - 1] = true;
    p.image_[k] = v - 1;
  }
  return p;
}

Permutation Permutation::transposition(std::size_t degree, int a, int b) {
  const auto in_range = [degree](int x) {
    return x >= 1 && static_cast<std::size_t>(x) <= degree;
  };
  if (!in_range(a) || !in_range(b) || a == b) {
    throw Error(ErrorKind::InvalidArgument,
                "transposition (" + std::to_string(a) + " " +
                    std::to_string(b) + ") invalid in degree " +
                    std::to_string(degree));
  }
  Permutation p(degree);
  std::swap(p.image_[a - 1], p.image_[b - 1]);
  return p;
}

int Permutation::operator()(int point) const {
  if (point < 1 || static_cast<std::size_t>(point) > image_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "point " + std::to_string(point) + " outside degree " +
                    std::to_string(image_.size()));
  }
  return image_[point - 1] + 1;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) {
    throw Error(ErrorKind::InvalidArgument, "degree mismatch in product");
  }
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) {
    out.image_[k] = next.image_[image_[k]];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) {
    out.image_[image_[k]] = static_cast<int>(k);
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != static_cast<int>(k)) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> Permutation::as_transposition() const {
  std::vector<int> moved;
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != static_cast<int>(k)) moved.push_back(static_cast<int>(k));
    if (moved.size() > 2) return std::nullopt;
  }
  if (moved.size() != 2 || image_[moved[0]] != moved[1]) return std::nullopt;
  return std::pair{moved[0] + 1, moved[1] + 1};
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(start); !seen[x]; x = image_[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) os << ' ';
      os << cycle[k];
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

bool is_transitive(std::size_t degree,
                   const std::vector<Permutation>& generators) {
  if (degree == 0) return true;
  std::vector<bool> reached(degree, false);
  std::vector<int> stack{1};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      const int y = g(x);
      if (!reached[y - 1]) {
        reached[y - 1] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree;
}

}  // namespace braidcover
