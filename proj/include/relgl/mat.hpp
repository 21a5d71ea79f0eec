#pragma once

// Exact n x n matrices over a FiniteRing, transvections and the z/y generator matrices.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relgl/error.hpp"
#include "relgl/ring.hpp"

namespace relgl {

inline constexpr unsigned kMaxDegree = 4;

/// Square matrix of ring element indices. Positions are 0-based.
struct Mat {
  const FiniteRing* ring = nullptr;
  unsigned n = 0;
  std::array<Elem, kMaxDegree * kMaxDegree> e{};

  Elem operator()(unsigned i, unsigned j) const { return e[i * n + j]; }
  Elem& at(unsigned i, unsigned j) { return e[i * n + j]; }

  friend bool operator==(const Mat& a, const Mat& b) { return a.ring == b.ring && a.n == b.n && a.e == b.e; }
};

namespace detail {

inline void require_compatible(const Mat& x, const Mat& y) {
  if (x.ring != y.ring || x.n != y.n) fail(ErrorKind::invalid_pair, "matrices over different rings or degrees");
}

inline void require_degree(unsigned n) {
  if (n < 1 || n > kMaxDegree)
    fail(ErrorKind::invalid_parameter, "degree must be in 1.." + std::to_string(kMaxDegree));
}

inline void require_positions(unsigned n, unsigned i, unsigned j) {
  if (i >= n || j >= n) fail(ErrorKind::invalid_position, "position outside the matrix");
  if (i == j) fail(ErrorKind::invalid_position, "transvection positions must differ");
}

}  // namespace detail

inline Mat zero_matrix(const FiniteRing& r, unsigned n) {
  detail::require_degree(n);
  Mat m;
  m.ring = &r;
  m.n = n;
  m.e.fill(r.zero());
  return m;
}

inline Mat identity(const FiniteRing& r, unsigned n) {
  Mat m = zero_matrix(r, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = r.one();
  return m;
}

inline Mat diagonal(const FiniteRing& r, const std::vector<Elem>& d) {
  Mat m = zero_matrix(r, static_cast<unsigned>(d.size()));
  for (unsigned i = 0; i < m.n; ++i) m.at(i, i) = d[i];
  return m;
}

inline Mat scalar(const FiniteRing& r, unsigned n, Elem lambda) {
  return diagonal(r, std::vector<Elem>(n, lambda));
}

/// Permutation matrix sending basis vector j to basis vector perm[j].
inline Mat permutation_matrix(const FiniteRing& r, const std::vector<unsigned>& perm) {
  Mat m = zero_matrix(r, static_cast<unsigned>(perm.size()));
  for (unsigned j = 0; j < m.n; ++j) m.at(perm[j], j) = r.one();
  return m;
}

inline Mat mat_mul(const Mat& x, const Mat& y) {
  detail::require_compatible(x, y);
  const FiniteRing& r = *x.ring;
  const unsigned n = x.n;
  Mat out;
  out.ring = x.ring;
  out.n = n;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Elem acc = r.mul(x.e[i * n], y.e[j]);
      for (unsigned k = 1; k < n; ++k) acc = r.add(acc, r.mul(x.e[i * n + k], y.e[k * n + j]));
      out.e[i * n + j] = acc;
    }
  return out;
}

inline Mat operator*(const Mat& x, const Mat& y) { return mat_mul(x, y); }

inline bool is_identity(const Mat& x) { return x == identity(*x.ring, x.n); }

/// t_ij(xi) = e + xi e_ij.
inline Mat transvection(const FiniteRing& r, unsigned n, unsigned i, unsigned j, Elem xi) {
  detail::require_degree(n);
  detail::require_positions(n, i, j);
  Mat m = identity(r, n);
  m.at(i, j) = xi;
  return m;
}

/// Determinant by cofactor expansion; only meaningful over commutative rings.
inline Elem determinant(const Mat& x) {
  const FiniteRing& r = *x.ring;
  if (!r.is_commutative()) fail(ErrorKind::invalid_input, "determinant requires a commutative ring");
  std::vector<unsigned> rows(x.n), cols(x.n);
  for (unsigned i = 0; i < x.n; ++i) rows[i] = cols[i] = i;
  auto rec = [&](auto&& self, const std::vector<unsigned>& rs, const std::vector<unsigned>& cs) -> Elem {
    if (rs.size() == 1) return x(rs[0], cs[0]);
    Elem acc = r.zero();
    std::vector<unsigned> sub_r(rs.begin() + 1, rs.end());
    for (std::size_t c = 0; c < cs.size(); ++c) {
      std::vector<unsigned> sub_c;
      for (std::size_t d = 0; d < cs.size(); ++d)
        if (d != c) sub_c.push_back(cs[d]);
      Elem term = r.mul(x(rs[0], cs[c]), self(self, sub_r, sub_c));
      acc = (c % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
    }
    return acc;
  };
  return rec(rec, rows, cols);
}

namespace detail {

inline std::optional<Mat> inverse_commutative(const Mat& x) {
  const FiniteRing& r = *x.ring;
  auto dinv = r.inverse(determinant(x));
  if (!dinv) return std::nullopt;
  const unsigned n = x.n;
  Mat inv = zero_matrix(r, n);
  if (n == 1) {
    inv.at(0, 0) = *dinv;
    return inv;
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Mat minor = zero_matrix(r, n - 1);
      for (unsigned a = 0, ra = 0; a < n; ++a) {
        if (a == j) continue;
        for (unsigned b = 0, cb = 0; b < n; ++b) {
          if (b == i) continue;
          minor.at(ra, cb++) = x(a, b);
        }
        ++ra;
      }
      Elem cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = r.neg(cof);
      inv.at(i, j) = r.mul(cof, *dinv);
    }
  return inv;
}

// Columns of x generate R^n as a right module iff every basis vector is some x*c;
// the solutions c give a right inverse, which is two-sided for finite rings.
inline std::optional<Mat> inverse_by_module_scan(const Mat& x) {
  const FiniteRing& r = *x.ring;
  const unsigned n = x.n;
  const std::size_t q = r.size();
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= q;
    if (total > (std::size_t{1} << 26)) fail(ErrorKind::cap_exceeded, "module scan for inverse too large");
  }
  Mat inv = zero_matrix(r, n);
  std::vector<bool> found(n, false);
  unsigned remaining = n;
  std::array<Elem, kMaxDegree> c{};
  for (std::size_t code = 0; code < total && remaining > 0; ++code) {
    std::size_t t = code;
    for (unsigned k = 0; k < n; ++k) {
      c[k] = static_cast<Elem>(t % q);
      t /= q;
    }
    int basis = -1;
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) {
      Elem acc = r.zero();
      for (unsigned k = 0; k < n; ++k) acc = r.add(acc, r.mul(x(i, k), c[k]));
      if (acc == r.one()) {
        if (basis >= 0) ok = false;
        basis = static_cast<int>(i);
      } else if (acc != r.zero()) {
        ok = false;
      }
    }
    if (!ok || basis < 0 || found[basis]) continue;
    found[basis] = true;
    --remaining;
    for (unsigned k = 0; k < n; ++k) inv.at(k, static_cast<unsigned>(basis)) = c[k];
  }
  if (remaining > 0) return std::nullopt;
  if (!is_identity(inv * x)) return std::nullopt;
  return inv;
}

}  // namespace detail

/// Two-sided inverse, or nullopt if x is not invertible.
inline std::optional<Mat> mat_inverse(const Mat& x) {
  if (x.ring->is_commutative()) return detail::inverse_commutative(x);
  return detail::inverse_by_module_scan(x);
}

inline bool is_invertible(const Mat& x) { return mat_inverse(x).has_value(); }

/// Inverse of a matrix known to be invertible.
inline Mat inverse_of(const Mat& x) {
  auto inv = mat_inverse(x);
  if (!inv) fail(ErrorKind::invalid_input, "matrix is not invertible");
  return *inv;
}

/// [x, y] = x y x⁻¹ y⁻¹ given both inverses.
inline Mat commutator(const Mat& x, const Mat& x_inv, const Mat& y, const Mat& y_inv) {
  return x * y * x_inv * y_inv;
}

inline Mat commutator(const Mat& x, const Mat& y) { return commutator(x, inverse_of(x), y, inverse_of(y)); }

/// z_ij(a, c) = t_ij(c) t_ji(a) t_ij(-c).
inline Mat z_gen(const FiniteRing& r, unsigned n, unsigned i, unsigned j, Elem a, Elem c) {
  return transvection(r, n, i, j, c) * transvection(r, n, j, i, a) * transvection(r, n, i, j, r.neg(c));
}

/// y_ij(a, b) = [t_ij(a), t_ji(b)].
inline Mat y_gen(const FiniteRing& r, unsigned n, unsigned i, unsigned j, Elem a, Elem b) {
  return transvection(r, n, i, j, a) * transvection(r, n, j, i, b) * transvection(r, n, i, j, r.neg(a)) *
         transvection(r, n, j, i, r.neg(b));
}

/// Apply a ring map entrywise.
template <class Map>
Mat map_entries(const Mat& x, const FiniteRing& target, Map&& f) {
  Mat out = zero_matrix(target, x.n);
  for (unsigned k = 0; k < x.n * x.n; ++k) out.e[k] = f(x.e[k]);
  return out;
}

/// Whether a single uint64 key can encode every n x n matrix over r.
inline bool key_fits(const FiniteRing& r, unsigned n) { return sat_pow(r.size(), n * n) != UINT64_MAX; }

/// Injective row-major mixed-radix key. Requires key_fits(ring, n).
inline std::uint64_t mat_key(const Mat& x) {
  const std::uint64_t q = x.ring->size();
  std::uint64_t k = 0;
  for (unsigned i = x.n * x.n; i-- > 0;) k = k * q + x.e[i];
  return k;
}

inline Mat mat_from_key(const FiniteRing& r, unsigned n, std::uint64_t key) {
  Mat m = zero_matrix(r, n);
  for (unsigned i = 0; i < n * n; ++i) {
    m.e[i] = static_cast<Elem>(key % r.size());
    key /= r.size();
  }
  return m;
}

/// Row-major entry indices, e.g. "[[1,2,0],[0,1,0],[0,0,1]]".
inline std::string to_text(const Mat& x) {
  std::string s = "[";
  for (unsigned i = 0; i < x.n; ++i) {
    s += i ? ",[" : "[";
    for (unsigned j = 0; j < x.n; ++j) {
      if (j) s += ",";
      s += std::to_string(x(i, j));
    }
    s += "]";
  }
  return s + "]";
}

inline Mat from_text(const FiniteRing& r, const std::string& text) {
  json rows;
  try {
    rows = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("bad matrix text: ") + e.what());
  }
  if (!rows.is_array() || rows.empty()) fail(ErrorKind::invalid_input, "matrix text must be a nested array");
  const unsigned n = static_cast<unsigned>(rows.size());
  Mat m = zero_matrix(r, n);
  for (unsigned i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) fail(ErrorKind::invalid_input, "matrix text is not square");
    for (unsigned j = 0; j < n; ++j) {
      auto v = rows[i][j].get<long>();
      if (v < 0 || static_cast<std::size_t>(v) >= r.size()) fail(ErrorKind::invalid_input, "entry out of range");
      m.at(i, j) = static_cast<Elem>(v);
    }
  }
  return m;
}

}  // namespace relgl
