#pragma once

// Exact dense linear algebra and integer polynomials.
//
// Everything is computed over arbitrary-precision integers; there is no
// floating point anywhere in this library.  Matrices are square value types,
// polynomials are coefficient vectors (lowest degree first).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "signcox/errors.hpp"

namespace signcox {

using Int = boost::multiprecision::cpp_int;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const { return n_; }

  // 0-based entry access.  (Vertex-indexed helpers elsewhere are 1-based and
  // say so; raw matrix positions are always 0-based.)
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  bool operator==(const ExactMatrix& o) const {
    return n_ == o.n_ && a_ == o.a_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const Int& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (a_[i * n_ + j] != (i == j ? 1 : 0)) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Int> a_;
};

inline ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim())
    throw PreconditionError("matmul: dimension mismatch");
  const std::size_t n = a.dim();
  ExactMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;  // products here are mostly sparse
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  return matmul(a, b);
}

inline ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("add: dimension mismatch");
  ExactMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("sub: dimension mismatch");
  ExactMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline ExactMatrix operator*(const Int& s, const ExactMatrix& a) {
  ExactMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(j, i) = a(i, j);
  return c;
}

inline Int trace(const ExactMatrix& a) {
  Int t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

// Binary exponentiation; k = 0 yields the identity.
inline ExactMatrix matpow(const ExactMatrix& a, unsigned long k) {
  ExactMatrix result = ExactMatrix::identity(a.dim());
  ExactMatrix base = a;
  while (k > 0) {
    if (k & 1) result = matmul(result, base);
    base = matmul(base, base);
    k >>= 1;
  }
  return result;
}

// Permutation matrix swapping basis vectors i and j (1-based vertex indices,
// to match how it is used on generator indices).  i == j gives the identity.
inline ExactMatrix basis_swap_matrix(std::size_t n, std::size_t i,
                                     std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw PreconditionError("basis_swap_matrix: index out of range");
  ExactMatrix m = ExactMatrix::identity(n);
  if (i != j) {
    m(i - 1, i - 1) = 0;
    m(j - 1, j - 1) = 0;
    m(i - 1, j - 1) = 1;
    m(j - 1, i - 1) = 1;
  }
  return m;
}

// Determinant by fraction-free Gaussian elimination (Bareiss).  Every
// intermediate quantity is an exact integer; the divisions below are exact
// by the Sylvester identity, which is what makes the one-step method work.
inline Int det(ExactMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// A compact, injective byte encoding of (dimension, entries).  Used as the
// visited-set key during group enumeration; two matrices map to the same key
// iff they are equal.
inline std::string canonical_key(const ExactMatrix& m) {
  std::string key;
  const std::size_t n = m.dim();
  key.reserve(8 + n * n * 4);
  key.push_back(static_cast<char>(n & 0xff));
  key.push_back(static_cast<char>((n >> 8) & 0xff));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int& v = m(i, j);
      key.push_back(v < 0 ? '-' : (v > 0 ? '+' : '0'));
      if (v != 0) {
        std::string digits = (v < 0 ? Int(-v) : v).str(0, std::ios_base::hex);
        // length prefix keeps the concatenation injective
        key.push_back(static_cast<char>(digits.size() & 0xff));
        key.push_back(static_cast<char>((digits.size() >> 8) & 0xff));
        key.append(digits);
      }
    }
  return key;
}

// ---------------------------------------------------------------------------
// Integer polynomials, lowest-degree coefficient first.
// The zero polynomial is the empty vector; otherwise the leading (last)
// coefficient is nonzero.

struct IntPolynomial {
  std::vector<Int> coeff;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> c) : coeff(std::move(c)) { trim(); }

  void trim() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  }

  bool is_zero() const { return coeff.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(coeff.size()) - 1; }

  const Int& operator[](std::size_t i) const { return coeff[i]; }

  bool operator==(const IntPolynomial& o) const { return coeff == o.coeff; }
  bool operator!=(const IntPolynomial& o) const { return coeff != o.coeff; }
};

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeff.size(), b.coeff.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeff.size()) c[i] += a.coeff[i];
    if (i < b.coeff.size()) c[i] += b.coeff[i];
  }
  return IntPolynomial(std::move(c));
}

inline IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeff.size(), b.coeff.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeff.size()) c[i] += a.coeff[i];
    if (i < b.coeff.size()) c[i] -= b.coeff[i];
  }
  return IntPolynomial(std::move(c));
}

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Int> c(a.coeff.size() + b.coeff.size() - 1);
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeff.size(); ++j)
      c[i + j] += a.coeff[i] * b.coeff[j];
  }
  return IntPolynomial(std::move(c));
}

// Exact division: returns q with a = q*b.  Throws if b is zero or does not
// divide a over the integers.
inline IntPolynomial poly_divexact(const IntPolynomial& a,
                                   const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("poly_divexact: division by zero");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree())
    throw PreconditionError("poly_divexact: not divisible");
  std::vector<Int> rem = a.coeff;
  std::vector<Int> q(a.coeff.size() - b.coeff.size() + 1);
  const Int& lead = b.coeff.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Int top = rem[k + b.coeff.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0)
      throw PreconditionError("poly_divexact: not divisible");
    q[k] = top / lead;
    for (std::size_t j = 0; j < b.coeff.size(); ++j)
      rem[k + j] -= q[k] * b.coeff[j];
  }
  for (const Int& r : rem)
    if (r != 0) throw PreconditionError("poly_divexact: not divisible");
  return IntPolynomial(std::move(q));
}

inline std::string poly_to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = p.coeff.size(); k-- > 0;) {
    const Int& c = p.coeff[k];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    const bool show_coeff = (mag != 1) || (k == 0);
    if (show_coeff) s += mag.str();
    if (k > 0) {
      if (show_coeff) s += "*";
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

// Characteristic polynomial det(xI - A), exactly, via the Faddeev-LeVerrier
// recurrence: M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I,
// c_{n-k} = -tr(A M_k)/k.  All the divisions are exact.  Cost is n matrix
// products, which beats cofactor expansion from n = 4 on and never touches
// rationals.
inline IntPolynomial char_poly(const ExactMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      ExactMatrix am = matmul(a, m);
      for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
      m = std::move(am);
    }
    Int t = trace(matmul(a, m));
    if (t % Int(k) != 0)
      throw Error("char_poly: non-exact division (internal error)");
    c[n - k] = -t / Int(k);
  }
  return IntPolynomial(std::move(c));
}

namespace detail {

inline unsigned long euler_phi(unsigned long d) {
  unsigned long result = d;
  unsigned long m = d;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace detail

// d-th cyclotomic polynomial, computed as (x^d - 1) divided by the product of
// the cyclotomic polynomials of the proper divisors of d.  Supported for
// 1 <= d <= 210.
inline IntPolynomial cyclotomic(unsigned long d) {
  if (d < 1 || d > 210)
    throw PreconditionError("cyclotomic: d must be in [1, 210]");
  std::vector<Int> xd(d + 1);
  xd[0] = -1;
  xd[d] = 1;
  IntPolynomial num{std::move(xd)};
  for (unsigned long e = 1; e < d; ++e)
    if (d % e == 0) num = poly_divexact(num, cyclotomic(e));
  return num;
}

// True iff p is a (possibly empty) product of cyclotomic polynomials.
// Cyclotomics are irreducible over the integers, so greedy repeated division
// by each candidate factor of admissible degree is a complete decision
// procedure (up to the supported index range, which covers every cyclotomic
// of degree <= 47 and far beyond the sizes used here).
inline bool is_cyclotomic_product(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  IntPolynomial q = p;
  if (q.coeff.back() != 1) return false;  // cyclotomic products are monic
  bool progress = true;
  while (q.degree() > 0 && progress) {
    progress = false;
    for (unsigned long d = 1; d <= 210; ++d) {
      if (static_cast<long>(detail::euler_phi(d)) > q.degree()) continue;
      IntPolynomial f = cyclotomic(d);
      try {
        IntPolynomial r = poly_divexact(q, f);
        q = r;
        progress = true;
        break;
      } catch (const PreconditionError&) {
        // not a factor; keep scanning
      }
    }
  }
  return q.degree() == 0 && q.coeff[0] == 1;
}

}  // namespace signcox
