#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "affschur/combinatorics.hpp"
#include "affschur/periodic_matrix.hpp"
#include "affschur/scalar.hpp"

namespace affschur {

/// Finite Z-linear combination of basis elements e_A of the affine Schur
/// algebra S(n, r) at v = 1. Zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<PeriodicMatrix, Integer>;

  AlgebraElement(int n, int r);
  static AlgebraElement basis(const PeriodicMatrix& a);

  int n() const { return n_; }
  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const PeriodicMatrix& a) const;

  void add_term(const PeriodicMatrix& a, const Integer& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Integer& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Integer& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void check_ambient(const AlgebraElement& o) const;

  int n_;
  int r_;
  Terms terms_;
};

std::string to_string(const AlgebraElement& x);

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Orbit-counting structure constant: #{s in I(Z,r) : (p,s) ~ A, (s,q) ~ B}.
/// (p, q) may be any representative; the count is finite because (p,s) ~ A
/// pins each s_t to p_t plus an offset occurring in A.
Integer structure_constant(const PeriodicMatrix& a, const PeriodicMatrix& b, const MultiIndex& p,
                           const MultiIndex& q);

/// e_A e_B by discovering every product key through composed index
/// assignments and certifying each with structure_constant.
AlgebraElement multiply_basis_oracle(const PeriodicMatrix& a, const PeriodicMatrix& b);

/// e_A e_B by the double-coset formula over Young-type stabilizers.
AlgebraElement multiply_basis_coset(const PeriodicMatrix& a, const PeriodicMatrix& b);

enum class MultiplyMethod { Oracle, Coset, CrossCheck };

std::string to_string(MultiplyMethod m);
MultiplyMethod parse_method(std::string_view text);

/// Raised in cross-check mode when the two product routes disagree.
class MethodDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Memo table (A, B) -> e_A e_B. Safe for concurrent readers and writers;
/// concurrent writers of one key store identical values.
class StructureConstantTable {
 public:
  std::shared_ptr<const AlgebraElement> find(const PeriodicMatrix& a, const PeriodicMatrix& b) const;
  std::shared_ptr<const AlgebraElement> store(const PeriodicMatrix& a, const PeriodicMatrix& b, AlgebraElement value);
  std::size_t size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<PeriodicMatrix, PeriodicMatrix>& k) const {
      return k.first.hash() * 31u + k.second.hash();
    }
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<PeriodicMatrix, PeriodicMatrix>, std::shared_ptr<const AlgebraElement>, KeyHash> table_;
};

/// Bilinear multiplication through a selected basis-product route, memoized.
class Multiplier {
 public:
  explicit Multiplier(MultiplyMethod method = MultiplyMethod::Oracle);

  MultiplyMethod method() const { return method_; }
  const AlgebraElement& basis_product(const PeriodicMatrix& a, const PeriodicMatrix& b);
  AlgebraElement operator()(const AlgebraElement& x, const AlgebraElement& y);
  std::size_t cache_size() const { return table_->size(); }

 private:
  MultiplyMethod method_;
  std::shared_ptr<StructureConstantTable> table_;
};

AlgebraElement identity(int n, int r);
/// l_lam = e_{diag(lam)}.
AlgebraElement idempotent(const Composition& lam);
/// Key-wise transpose; the candidate involution tau.
AlgebraElement antiauto(const AlgebraElement& x);

}  // namespace affschur
