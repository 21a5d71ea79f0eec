#pragma once

// Finite associative rings with 1, given by element indices 0..size-1.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relgl/element_set.hpp"
#include "relgl/error.hpp"

namespace relgl {

using json = nlohmann::ordered_json;

/// Rings at or below this size keep full addition and multiplication tables.
inline constexpr std::size_t kTableLimit = 512;
/// Hard limit on ring size; unit scans and ideal closures are quadratic in it.
inline constexpr std::size_t kMaxRingSize = 8192;

// Multiplication that saturates at UINT64_MAX.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                       : static_cast<std::uint64_t>(p);
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

/// |GL(n, Z/m)|, multiplicative over prime powers, |GL(n,Z/p^k)| = p^((k-1)n^2) |GL(n,Z/p)|.
inline std::uint64_t zmod_gl_order(std::uint64_t m, unsigned n) {
  std::uint64_t total = 1;
  auto prime_power = [&](std::uint64_t p, unsigned k) {
    std::uint64_t pn = sat_pow(p, n);
    std::uint64_t field = 1;
    for (unsigned i = 0; i < n; ++i) field = sat_mul(field, pn - sat_pow(p, i));
    total = sat_mul(total, sat_mul(field, sat_pow(p, (k - 1) * n * n)));
  };
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k > 0) prime_power(p, k);
  }
  if (rest > 1) prime_power(rest, 1);
  return total;
}

/// Structural description of a ring: element count, operations, names.
class RingStructure {
 public:
  virtual ~RingStructure() = default;
  virtual std::size_t size() const = 0;
  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual std::string name(Elem a) const = 0;
  virtual json descriptor() const = 0;
  /// Exact |GL(n, R)| when a closed formula is known for this ring family.
  virtual std::optional<std::uint64_t> gl_order(unsigned n) const = 0;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
 public:
  explicit FiniteRing(std::shared_ptr<const RingStructure> s) : s_(std::move(s)), size_(s_->size()) {
    if (size_ == 0 || size_ > kMaxRingSize) fail(ErrorKind::invalid_parameter, "ring size out of range");
    zero_ = s_->zero();
    one_ = s_->one();
    if (size_ <= kTableLimit) {
      add_.resize(size_ * size_);
      mul_.resize(size_ * size_);
      for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b) {
          add_[a * size_ + b] = s_->add(static_cast<Elem>(a), static_cast<Elem>(b));
          mul_[a * size_ + b] = s_->mul(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    }
    neg_.resize(size_);
    for (std::size_t a = 0; a < size_; ++a) neg_[a] = s_->neg(static_cast<Elem>(a));

    commutative_ = true;
    for (std::size_t a = 0; a < size_ && commutative_; ++a)
      for (std::size_t b = a + 1; b < size_; ++b)
        if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) {
          commutative_ = false;
          break;
        }

    inverse_.assign(size_, std::nullopt);
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t b = 0; b < size_; ++b)
        if (mul(Elem(a), Elem(b)) == one_ && mul(Elem(b), Elem(a)) == one_) {
          inverse_[a] = static_cast<Elem>(b);
          units_.push_back(static_cast<Elem>(a));
          break;
        }
  }

  std::size_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  bool is_commutative() const noexcept { return commutative_; }

  Elem add(Elem a, Elem b) const {
    return add_.empty() ? s_->add(a, b) : add_[std::size_t{a} * size_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_.empty() ? s_->mul(a, b) : mul_[std::size_t{a} * size_ + b];
  }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

  bool is_unit(Elem a) const noexcept { return inverse_[a].has_value(); }
  std::optional<Elem> inverse(Elem a) const noexcept { return inverse_[a]; }
  /// Elements with a two-sided inverse, ascending.
  const std::vector<Elem>& units() const noexcept { return units_; }

  std::string name(Elem a) const { return s_->name(a); }
  json descriptor() const { return s_->descriptor(); }
  std::optional<std::uint64_t> gl_order(unsigned n) const { return s_->gl_order(n); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = static_cast<Elem>(i);
    return out;
  }

  /// Index of the element whose name() is `label`, if any.
  std::optional<Elem> find_by_name(const std::string& label) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (s_->name(Elem(i)) == label) return static_cast<Elem>(i);
    return std::nullopt;
  }

 private:
  std::shared_ptr<const RingStructure> s_;
  std::size_t size_;
  Elem zero_ = 0;
  Elem one_ = 0;
  bool commutative_ = true;
  std::vector<Elem> add_, mul_, neg_;
  std::vector<std::optional<Elem>> inverse_;
  std::vector<Elem> units_;
};

/// A ring homomorphism given by its image map on source indices.
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a]; }

  bool preserves_structure() const {
    if (image[source->zero()] != target->zero() || image[source->one()] != target->one()) return false;
    for (std::size_t a = 0; a < source->size(); ++a)
      for (std::size_t b = 0; b < source->size(); ++b) {
        if (image[source->add(Elem(a), Elem(b))] != target->add(image[a], image[b])) return false;
        if (image[source->mul(Elem(a), Elem(b))] != target->mul(image[a], image[b])) return false;
      }
    return true;
  }

  bool is_surjective() const {
    ElementSet hit(target->size());
    for (auto x : image) hit.insert(x);
    return hit.count() == target->size();
  }
};

namespace detail {

class ZmodStructure final : public RingStructure {
 public:
  explicit ZmodStructure(unsigned m) : m_(m) {}
  std::size_t size() const override { return m_; }
  Elem zero() const override { return 0; }
  Elem one() const override { return static_cast<Elem>(1 % m_); }
  Elem add(Elem a, Elem b) const override { return static_cast<Elem>((unsigned{a} + b) % m_); }
  Elem neg(Elem a) const override { return static_cast<Elem>((m_ - a) % m_); }
  Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((unsigned{a} * b) % m_); }
  std::string name(Elem a) const override { return std::to_string(a); }
  json descriptor() const override { return json{{"kind", "zmod"}, {"m", m_}}; }
  std::optional<std::uint64_t> gl_order(unsigned n) const override { return zmod_gl_order(m_, n); }

 private:
  unsigned m_;
};

// Index of (r, s) is r * |S| + s.
class ProductStructure final : public RingStructure {
 public:
  ProductStructure(RingPtr r, RingPtr s) : r_(std::move(r)), s_(std::move(s)) {}
  std::size_t size() const override { return r_->size() * s_->size(); }
  Elem zero() const override { return pack(r_->zero(), s_->zero()); }
  Elem one() const override { return pack(r_->one(), s_->one()); }
  Elem add(Elem a, Elem b) const override {
    return pack(r_->add(left(a), left(b)), s_->add(right(a), right(b)));
  }
  Elem neg(Elem a) const override { return pack(r_->neg(left(a)), s_->neg(right(a))); }
  Elem mul(Elem a, Elem b) const override {
    return pack(r_->mul(left(a), left(b)), s_->mul(right(a), right(b)));
  }
  std::string name(Elem a) const override { return "(" + r_->name(left(a)) + "," + s_->name(right(a)) + ")"; }
  json descriptor() const override {
    json factors = json::array();
    auto append = [&](const json& d) {
      if (d.value("kind", "") == "product")
        for (const auto& f : d["factors"]) factors.push_back(f);
      else
        factors.push_back(d);
    };
    append(r_->descriptor());
    append(s_->descriptor());
    return json{{"kind", "product"}, {"factors", factors}};
  }
  std::optional<std::uint64_t> gl_order(unsigned n) const override {
    auto a = r_->gl_order(n);
    auto b = s_->gl_order(n);
    if (!a || !b) return std::nullopt;
    return sat_mul(*a, *b);
  }

  Elem pack(Elem r, Elem s) const { return static_cast<Elem>(std::size_t{r} * s_->size() + s); }
  Elem left(Elem a) const { return static_cast<Elem>(a / s_->size()); }
  Elem right(Elem a) const { return static_cast<Elem>(a % s_->size()); }

 private:
  RingPtr r_, s_;
};

// [[a, b], [0, c]] over Z/m has index (a*m + b)*m + c.
class TriangularStructure final : public RingStructure {
 public:
  explicit TriangularStructure(unsigned m) : m_(m) {}
  std::size_t size() const override { return std::size_t{m_} * m_ * m_; }
  Elem zero() const override { return 0; }
  Elem one() const override { return pack(1 % m_, 0, 1 % m_); }
  Elem add(Elem x, Elem y) const override {
    auto [a, b, c] = unpack(x);
    auto [d, e, f] = unpack(y);
    return pack((a + d) % m_, (b + e) % m_, (c + f) % m_);
  }
  Elem neg(Elem x) const override {
    auto [a, b, c] = unpack(x);
    return pack((m_ - a) % m_, (m_ - b) % m_, (m_ - c) % m_);
  }
  Elem mul(Elem x, Elem y) const override {
    auto [a, b, c] = unpack(x);
    auto [d, e, f] = unpack(y);
    return pack((a * d) % m_, (a * e + b * f) % m_, (c * f) % m_);
  }
  std::string name(Elem x) const override {
    auto [a, b, c] = unpack(x);
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[0," + std::to_string(c) + "]]";
  }
  json descriptor() const override { return json{{"kind", "triangular"}, {"m", m_}}; }
  // A block upper-triangular matrix is invertible iff both diagonal blocks are.
  std::optional<std::uint64_t> gl_order(unsigned n) const override {
    auto g = zmod_gl_order(m_, n);
    return sat_mul(sat_mul(g, g), sat_pow(m_, n * n));
  }

  Elem pack(unsigned a, unsigned b, unsigned c) const { return static_cast<Elem>((a * m_ + b) * m_ + c); }
  std::tuple<unsigned, unsigned, unsigned> unpack(Elem x) const {
    return {x / (m_ * m_), (x / m_) % m_, x % m_};
  }

 private:
  unsigned m_;
};

// F2[x,y]/(x^2, xy, y^2): bit 0 = 1, bit 1 = x, bit 2 = y.
class LocalF2Structure final : public RingStructure {
 public:
  std::size_t size() const override { return 8; }
  Elem zero() const override { return 0; }
  Elem one() const override { return 1; }
  Elem add(Elem a, Elem b) const override { return static_cast<Elem>(a ^ b); }
  Elem neg(Elem a) const override { return a; }
  Elem mul(Elem a, Elem b) const override {
    unsigned c0 = a & 1U, c1 = (a >> 1) & 1U, c2 = (a >> 2) & 1U;
    unsigned d0 = b & 1U, d1 = (b >> 1) & 1U, d2 = (b >> 2) & 1U;
    unsigned r1 = (c0 & d1) ^ (c1 & d0);
    unsigned r2 = (c0 & d2) ^ (c2 & d0);
    return static_cast<Elem>((c0 & d0) | (r1 << 1) | (r2 << 2));
  }
  std::string name(Elem a) const override {
    if (a == 0) return "0";
    std::string s;
    auto term = [&](const char* t) {
      if (!s.empty()) s += "+";
      s += t;
    };
    if (a & 1U) term("1");
    if (a & 2U) term("x");
    if (a & 4U) term("y");
    return s;
  }
  json descriptor() const override { return json{{"kind", "local-f2"}}; }
  // Invertible iff invertible modulo the maximal ideal (x, y).
  std::optional<std::uint64_t> gl_order(unsigned n) const override {
    return sat_mul(zmod_gl_order(2, n), sat_pow(4, n * n));
  }
};

}  // namespace detail

inline RingPtr make_ring(std::shared_ptr<const RingStructure> s) {
  return std::make_shared<const FiniteRing>(std::move(s));
}

inline RingPtr make_zmod(long m) {
  if (m < 2) fail(ErrorKind::invalid_parameter, "make_zmod requires m >= 2, got " + std::to_string(m));
  if (static_cast<std::size_t>(m) > kMaxRingSize) fail(ErrorKind::invalid_parameter, "modulus too large");
  return make_ring(std::make_shared<detail::ZmodStructure>(static_cast<unsigned>(m)));
}

inline RingPtr make_product(RingPtr r, RingPtr s) {
  if (r->size() * s->size() > kMaxRingSize) fail(ErrorKind::invalid_parameter, "product ring too large");
  return make_ring(std::make_shared<detail::ProductStructure>(std::move(r), std::move(s)));
}

/// 2x2 upper-triangular matrices over Z/m.
inline RingPtr make_triangular(long m) {
  if (m < 2) fail(ErrorKind::invalid_parameter, "make_triangular requires m >= 2, got " + std::to_string(m));
  if (static_cast<std::size_t>(m) * m * m > kMaxRingSize) fail(ErrorKind::invalid_parameter, "modulus too large");
  return make_ring(std::make_shared<detail::TriangularStructure>(static_cast<unsigned>(m)));
}

/// F2[x,y]/(x^2, xy, y^2), the local ring with maximal ideal (x, y) squaring to zero.
inline RingPtr make_local_f2() { return make_ring(std::make_shared<detail::LocalF2Structure>()); }

inline std::vector<Elem> units(const FiniteRing& r) { return r.units(); }

/// Coordinate projections of a two-factor product ring built by make_product(r, s).
inline std::pair<RingHom, RingHom> product_projections(const RingPtr& prod, const RingPtr& r, const RingPtr& s) {
  if (prod->size() != r->size() * s->size()) fail(ErrorKind::invalid_pair, "not a product of the given factors");
  RingHom p{prod, r, {}}, q{prod, s, {}};
  p.image.resize(prod->size());
  q.image.resize(prod->size());
  for (std::size_t a = 0; a < prod->size(); ++a) {
    p.image[a] = static_cast<Elem>(a / s->size());
    q.image[a] = static_cast<Elem>(a % s->size());
  }
  return {p, q};
}

struct AxiomReport {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::string first_failure;
};

/// Checks ring axioms over all triples when |R| <= exhaustive_limit, else on `samples` random triples.
inline AxiomReport check_ring_axioms(const FiniteRing& r, std::size_t exhaustive_limit = 512,
                                     std::uint64_t samples = 200000, std::uint64_t seed = 1) {
  AxiomReport rep;
  auto check = [&](Elem a, Elem b, Elem c) {
    ++rep.triples_checked;
    const char* bad = nullptr;
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) bad = "additive associativity";
    else if (r.add(a, b) != r.add(b, a)) bad = "additive commutativity";
    else if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) bad = "associativity";
    else if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) bad = "left distributivity";
    else if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) bad = "right distributivity";
    else if (r.add(a, r.zero()) != a || r.add(a, r.neg(a)) != r.zero()) bad = "additive identity/inverse";
    else if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) bad = "multiplicative identity";
    if (bad && rep.ok) {
      rep.ok = false;
      rep.first_failure = std::string(bad) + " at (" + r.name(a) + ", " + r.name(b) + ", " + r.name(c) + ")";
    }
  };
  const std::size_t n = r.size();
  if (n <= exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(Elem(a), Elem(b), Elem(c));
  } else {
    rep.exhaustive = false;
    std::uint64_t state = seed;
    auto next = [&] {
      state += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return static_cast<Elem>((z ^ (z >> 31)) % n);
    };
    for (std::uint64_t i = 0; i < samples; ++i) check(next(), next(), next());
  }
  return rep;
}

}  // namespace relgl
