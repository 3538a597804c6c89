#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wordmap {

// A permutation of {0, ..., degree-1} in one-line notation:
// images[i] is where point i goes.
struct Permutation {
  std::vector<std::uint8_t> images;

  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> im) : images(std::move(im)) {}

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  std::size_t degree() const { return images.size(); }
  std::uint8_t apply(std::uint8_t x) const { return images[x]; }

  bool is_bijection() const {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) r.images[images[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  // Hash/dedup key: the raw image bytes.
  std::string key() const { return std::string(images.begin(), images.end()); }

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator!=(const Permutation& o) const { return images != o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

// (a * b)(x) = a(b(x)); apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i) r.images[i] = a.images[b.images[i]];
  return r;
}

}  // namespace wordmap
