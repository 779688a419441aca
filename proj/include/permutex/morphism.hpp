#pragma once

// Binary words as byte vectors and substitution morphisms over {0, 1}.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permutex {

using Bits = std::vector<std::uint8_t>;

inline std::string to_string(const Bits& u) {
  std::string s;
  s.reserve(u.size());
  for (auto b : u) s.push_back(b ? '1' : '0');
  return s;
}

inline Bits bits_from_string(std::string_view s) {
  Bits u;
  u.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("binary word may contain only 0 and 1, got '" +
                                  std::string(1, c) + "'");
    u.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return u;
}

// Substitution rule letter -> nonempty binary word.
class Morphism {
 public:
  Morphism(Bits image0, Bits image1)
      : images_{std::move(image0), std::move(image1)} {
    if (images_[0].empty() || images_[1].empty())
      throw std::invalid_argument("morphism images must be nonempty");
  }

  const Bits& image(std::uint8_t letter) const { return images_[letter & 1]; }

  // Whether iterating from seed yields a one-sided fixed point.
  bool prolongable_on(std::uint8_t seed) const {
    const Bits& im = image(seed);
    return im.size() >= 2 && im[0] == (seed & 1);
  }

  bool uniform_length(std::size_t k) const {
    return images_[0].size() == k && images_[1].size() == k;
  }

  // Text form "0>01,1>10"; both letters required, either order.
  static Morphism parse(std::string_view literal);

  std::string literal() const {
    return "0>" + to_string(images_[0]) + ",1>" + to_string(images_[1]);
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.images_[0] == b.images_[0] && a.images_[1] == b.images_[1];
  }

  static const Morphism& thue_morse() {
    static const Morphism m{{0, 1}, {1, 0}};
    return m;
  }
  static const Morphism& fibonacci() {
    static const Morphism m{{0, 1}, {0}};
    return m;
  }
  static const Morphism& doubling() {
    static const Morphism m{{0, 0}, {1, 1}};
    return m;
  }

 private:
  std::array<Bits, 2> images_;
};

inline Morphism Morphism::parse(std::string_view literal) {
  std::array<std::optional<Bits>, 2> images;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = literal.find(',', pos);
    const std::string_view entry =
        literal.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - pos);
    if (entry.size() < 3 || (entry[0] != '0' && entry[0] != '1') || entry[1] != '>')
      throw std::invalid_argument("bad morphism entry '" + std::string(entry) +
                                  "', expected letter>image as in 0>01");
    const int letter = entry[0] - '0';
    if (images[letter])
      throw std::invalid_argument("morphism literal defines letter " +
                                  std::to_string(letter) + " twice");
    images[letter] = bits_from_string(entry.substr(2));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!images[0] || !images[1])
    throw std::invalid_argument("morphism literal must define both 0 and 1");
  return Morphism(std::move(*images[0]), std::move(*images[1]));
}

inline Bits apply_morphism(const Morphism& m, const Bits& u) {
  Bits out;
  out.reserve(u.size() * 2);
  for (auto b : u) {
    const Bits& im = m.image(b);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

}  // namespace permutex
