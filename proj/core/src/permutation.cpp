#include "jl/permutation.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

#include "jl/error.hpp"

namespace jl {

Permutation::Permutation(std::size_t degree) {
  if (degree > kMaxDegree)
    throw CapExceeded("permutation degree " + std::to_string(degree) + " exceeds " +
                      std::to_string(kMaxDegree));
  degree_ = static_cast<std::uint16_t>(degree);
  for (std::size_t i = 0; i < degree; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const Point> images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point x = images[i];
    if (x >= images.size() || seen[x]) throw Error("images do not form a bijection");
    seen[x] = true;
    p.img_[i] = static_cast<std::uint8_t>(x);
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::span<const Cycle> cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const Cycle& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Point a = c[k];
      Point b = c[(k + 1) % c.size()];
      if (a >= degree || b >= degree)
        throw Error("cycle point " + std::to_string(std::max(a, b)) + " out of range for degree " +
                    std::to_string(degree));
      if (used[a]) throw Error("point " + std::to_string(a) + " repeated in cycles");
      used[a] = true;
      p.img_[a] = static_cast<std::uint8_t>(b);
    }
  }
  return p;
}

Permutation Permutation::cycle(std::size_t degree, std::initializer_list<Point> points) {
  Cycle c(points);
  return from_cycles(degree, std::span<const Cycle>(&c, 1));
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    Cycle c;
    skip();
    while (i < text.size() && text[i] != ')') {
      if (text[i] < '0' || text[i] > '9') throw ParseError("expected point", i);
      Point v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
      c.push_back(v);
      skip();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    ++i;
    if (c.size() > 1) cycles.push_back(std::move(c));
    skip();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (std::size_t i = 0; i < degree_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < degree_; ++i)
    if (img_[i] != i) return false;
  return true;
}

std::optional<Point> Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < degree_; ++i)
    if (img_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (const Cycle& c : cycles()) l = std::lcm(l, static_cast<std::uint64_t>(c.size()));
  return l;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(degree_, false);
  for (Point i = 0; i < degree_; ++i) {
    if (seen[i] || img_[i] == i) continue;
    Cycle c;
    for (Point j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const Cycle& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the active images.
  std::uint64_t h = 1469598103934665603ull ^ degree_;
  for (std::size_t i = 0; i < degree_; ++i) {
    h ^= img_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation Permutation::shifted(std::size_t new_degree, std::size_t offset) const {
  if (offset + degree_ > new_degree) throw DegreeMismatch("shifted block does not fit");
  Permutation r(new_degree);
  for (std::size_t i = 0; i < degree_; ++i)
    r.img_[offset + i] = static_cast<std::uint8_t>(offset + img_[i]);
  return r;
}

Permutation Permutation::restricted(std::size_t offset, std::size_t size) const {
  if (offset + size > degree_) throw DegreeMismatch("restriction block out of range");
  Permutation r(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t y = img_[offset + i];
    if (y < offset || y >= offset + size) throw Error("block is not invariant");
    r.img_[i] = static_cast<std::uint8_t>(y - offset);
  }
  return r;
}

Permutation Permutation::direct_sum(const Permutation& a, const Permutation& b) {
  Permutation r(static_cast<std::size_t>(a.degree_) + b.degree_);
  for (std::size_t i = 0; i < a.degree_; ++i) r.img_[i] = a.img_[i];
  for (std::size_t i = 0; i < b.degree_; ++i)
    r.img_[a.degree_ + i] = static_cast<std::uint8_t>(a.degree_ + b.img_[i]);
  return r;
}

bool operator==(const Permutation& a, const Permutation& b) noexcept {
  return a.degree_ == b.degree_ && std::memcmp(a.img_.data(), b.img_.data(), a.degree_) == 0;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  int c = std::memcmp(a.img_.data(), b.img_.data(), a.degree_);
  return c <=> 0;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree_ != q.degree_)
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree_) +
                         " and " + std::to_string(q.degree_));
  Permutation r;
  r.degree_ = p.degree_;
  for (std::size_t i = 0; i < p.degree_; ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

bool commute(const Permutation& a, const Permutation& b) noexcept {
  if (a.degree_ != b.degree_) return false;
  for (std::size_t i = 0; i < a.degree_; ++i)
    if (a.img_[b.img_[i]] != b.img_[a.img_[i]]) return false;
  return true;
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(compose(g, x), g.inverse());
}

Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? p.inverse() : p;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation r(p.degree());
  while (e) {
    if (e & 1) r = compose(r, base);
    base = compose(base, base);
    e >>= 1;
  }
  return r;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

}  // namespace jl
