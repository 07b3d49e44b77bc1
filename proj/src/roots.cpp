#include "affschur/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

namespace affschur {

namespace {

using Cld = std::complex<long double>;

void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Polynomial make_monic(Polynomial p) {
  trim(p);
  if (p.empty()) return p;
  const ComplexRational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

/// (quotient, remainder)
std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  trim(a);
  Polynomial q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, ComplexRational());
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const ComplexRational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    trim(a);
  }
  return {q, a};
}

Polynomial subtract(Polynomial a, const Polynomial& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

bool is_one(const Polynomial& p) { return p.size() == 1 && p[0] == ComplexRational(1); }

Cld approx(const ComplexRational& c) { return c.to_complex(); }

Cld eval_ld(const std::vector<Cld>& p, Cld x) {
  Cld acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Aberth iteration on a monic square-free polynomial, then Newton polish.
std::vector<Cld> numeric_roots(const Polynomial& monic) {
  const std::size_t d = monic.size() - 1;
  std::vector<Cld> p;
  for (const auto& c : monic) p.push_back(approx(c));
  std::vector<Cld> dp;
  for (std::size_t k = 1; k < p.size(); ++k) dp.push_back(p[k] * static_cast<long double>(k));
  if (d == 1) return {-p[0]};
  long double bound = 0;
  for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, std::abs(p[k]));
  bound += 1;
  std::vector<Cld> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double ang = 2.0L * 3.14159265358979323846L * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L;
    z[k] = std::polar(bound * 0.5L, ang);
  }
  for (int it = 0; it < 500; ++it) {
    long double moved = 0;
    for (std::size_t k = 0; k < d; ++k) {
      const Cld f = eval_ld(p, z[k]);
      const Cld fp = eval_ld(dp, z[k]);
      if (f == Cld(0)) continue;
      const Cld ratio = fp == Cld(0) ? Cld(1e-3L) : f / fp;
      Cld sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      const Cld step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (moved < 1e-18L) break;
  }
  for (auto& x : z) {
    for (int it = 0; it < 5; ++it) {
      const Cld fp = eval_ld(dp, x);
      if (fp == Cld(0)) break;
      x -= eval_ld(p, x) / fp;
    }
  }
  return z;
}

/// Continued-fraction convergents of x close to x.
std::vector<Rational> nearby_rationals(long double x) {
  std::vector<Rational> out;
  const long double tol = 1e-7L * std::max(1.0L, std::fabs(x));
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double v = x;
  for (int step = 0; step < 40; ++step) {
    const long double fl = std::floor(v);
    if (std::fabs(fl) > 1e18L) break;
    const Integer a(static_cast<long>(fl));
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational c(h1, k1);
    c.canonicalize();
    if (std::fabs(static_cast<long double>(c.get_d()) - x) < tol) out.push_back(c);
    if (mpz_sizeinbase(k1.get_mpz_t(), 10) > 15) break;
    const long double frac = v - fl;
    if (frac < 1e-30L) break;
    v = 1.0L / frac;
  }
  return out;
}

}  // namespace

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * ComplexRational(static_cast<long>(k)));
  trim(d);
  return d;
}

ComplexRational evaluate(const Polynomial& p, const ComplexRational& x) {
  ComplexRational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("polynomial division left a remainder");
  return q;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& monic) {
  Polynomial f = make_monic(monic);
  if (f.size() < 2) throw std::invalid_argument("squarefree_decomposition: degree must be positive");
  std::vector<std::pair<Polynomial, int>> out;
  const Polynomial fp = derivative(f);
  const Polynomial a0 = gcd(f, fp);
  Polynomial b = divide_exact(f, a0);
  Polynomial c = divide_exact(fp, a0);
  Polynomial d = subtract(c, derivative(b));
  for (int i = 1; !is_one(b); ++i) {
    Polynomial a = d.empty() ? b : gcd(b, d);
    b = divide_exact(b, a);
    c = d.empty() ? Polynomial{} : divide_exact(d, a);
    d = subtract(c, derivative(b));
    if (a.size() > 1) out.emplace_back(make_monic(a), i);
  }
  return out;
}

RootResult monic_roots(const Polynomial& monic) {
  RootResult res;
  res.exact = true;
  for (const auto& [factor, mult] : squarefree_decomposition(monic)) {
    for (const Cld& z : numeric_roots(factor)) {
      std::optional<ComplexRational> hit;
      const auto res_c = nearby_rationals(z.real());
      auto ims = nearby_rationals(z.imag());
      if (std::fabs(z.imag()) < 1e-12L * std::max(1.0L, std::abs(z))) ims.insert(ims.begin(), Rational(0));
      for (const auto& re : res_c) {
        for (const auto& im : ims) {
          const ComplexRational cand(re, im);
          if (evaluate(factor, cand).is_zero()) {
            hit = cand;
            break;
          }
        }
        if (hit) break;
      }
      ComplexRational root;
      if (hit) {
        root = *hit;
      } else {
        res.exact = false;
        root = ComplexRational(rational_from_long_double(z.real()), rational_from_long_double(z.imag()));
        res.residual = std::max(res.residual, std::abs(evaluate(factor, root).to_complex()));
      }
      for (int k = 0; k < mult; ++k) res.roots.push_back(root);
    }
  }
  std::sort(res.roots.begin(), res.roots.end());
  return res;
}

}  // namespace affschur
