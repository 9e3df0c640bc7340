#include "upinv/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "upinv/errors.hpp"

namespace upinv {

std::vector<Monomial> monomial_basis(std::uint32_t d) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(d));
  for (std::uint32_t k = 0; k <= d; ++k) {
    for (std::uint32_t y = k + 1; y-- > 0;) out.push_back({{d - k, y, k - y}});
  }
  return out;
}

std::size_t monomial_index(const Monomial& m) noexcept {
  const std::size_t k = m.degree() - m.exps[0];
  return k * (k + 1) / 2 + (k - m.exps[1]);
}

Polynomial Polynomial::constant(PrimeModulus p, std::int64_t c) { return term(p, c, Monomial::one()); }

Polynomial Polynomial::variable(PrimeModulus p, Var v) { return term(p, 1, Monomial::of(v)); }

Polynomial Polynomial::term(PrimeModulus p, std::int64_t c, const Monomial& m) {
  Polynomial f(p);
  f.add_term(m, p.reduce(c));
  return f;
}

Polynomial Polynomial::linear(PrimeModulus p, std::int64_t a, std::int64_t b, std::int64_t c) {
  Polynomial f(p);
  f.add_term(Monomial::of(Var::X), p.reduce(a));
  f.add_term(Monomial::of(Var::Y), p.reduce(b));
  f.add_term(Monomial::of(Var::Z), p.reduce(c));
  return f;
}

Polynomial Polynomial::from_dense(PrimeModulus p, std::uint32_t d, std::span<const std::uint32_t> coeffs) {
  if (coeffs.size() != monomial_count(d)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient vector does not match degree");
  }
  const auto basis = monomial_basis(d);
  Polynomial f(p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(basis[i], coeffs[i] % p.value());
  return f;
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const noexcept {
  return !terms_.empty() && terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::uint32_t Polynomial::coefficient(const Monomial& m) const noexcept {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::uint32_t Polynomial::degree_in(Var v) const noexcept {
  std::uint32_t best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.exps[static_cast<std::size_t>(v)]);
  return best;
}

void Polynomial::add_term(const Monomial& m, std::uint32_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = mod_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::homogeneous_part(std::uint32_t d) const {
  Polynomial out(mod_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::vector<std::uint32_t> Polynomial::dense(std::uint32_t d) const {
  std::vector<std::uint32_t> out(monomial_count(d), 0);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out[monomial_index(m)] = c;
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(mod_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, mod_.neg(c));
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_modulus(mod_, g.mod_);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_modulus(mod_, g.mod_);
  for (const auto& [m, c] : g.terms_) add_term(m, mod_.neg(c));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_modulus(f.mod_, g.mod_);
  Polynomial out(f.mod_);
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) out.add_term(mf * mg, f.mod_.mul(cf, cg));
  }
  return out;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= mod_.value();
  Polynomial out(mod_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, mod_.mul(v, c));
  return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(mod_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

namespace {

// C(n, k) mod p by Lucas' theorem; factorials are tabulated up to
// min(p - 1, max_n), which covers every base-p digit that can occur.
class BinomialModP {
 public:
  BinomialModP(PrimeModulus p, std::uint32_t max_n) : p_(p) {
    const std::uint32_t top = std::min<std::uint64_t>(p.value() - 1, max_n);
    fact_.assign(top + 1, 1);
    inv_fact_.assign(top + 1, 1);
    for (std::uint32_t i = 1; i <= top; ++i) fact_[i] = p.mul(fact_[i - 1], i);
    inv_fact_[top] = p.inv(fact_[top]);
    for (std::uint32_t i = top; i > 0; --i) inv_fact_[i - 1] = p.mul(inv_fact_[i], i);
  }

  std::uint32_t operator()(std::uint32_t n, std::uint32_t k) const {
    const std::uint32_t q = p_.value();
    std::uint32_t result = 1;
    while (k > 0) {
      const std::uint32_t nd = n % q, kd = k % q;
      if (kd > nd) return 0;
      result = p_.mul(result, p_.mul(fact_[nd], p_.mul(inv_fact_[kd], inv_fact_[nd - kd])));
      n /= q;
      k /= q;
    }
    return result;
  }

 private:
  PrimeModulus p_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

// x_i -> x_i + t * x_j
Polynomial shear(const Polynomial& f, std::size_t i, std::size_t j, std::uint32_t t) {
  if (t == 0) return f;
  const auto p = f.modulus();
  const BinomialModP binom(p, f.degree_in(static_cast<Var>(i)));
  Polynomial out(p);
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t e = m.exps[i];
    std::uint32_t tk = 1;
    for (std::uint32_t k = 0; k <= e; ++k, tk = p.mul(tk, t)) {
      const std::uint32_t b = binom(e, k);
      if (b == 0) continue;
      Monomial nm = m;
      nm.exps[i] = e - k;
      nm.exps[j] += k;
      out.add_term(nm, p.mul(c, p.mul(b, tk)));
    }
  }
  return out;
}

// x_i -> a * x_i
Polynomial scale(const Polynomial& f, std::size_t i, std::uint32_t a) {
  if (a == 1) return f;
  const auto p = f.modulus();
  Polynomial out(p);
  for (const auto& [m, c] : f.terms()) out.add_term(m, p.mul(c, p.pow(a, m.exps[i])));
  return out;
}

// x_i <-> x_j
Polynomial swap_vars(const Polynomial& f, std::size_t i, std::size_t j) {
  Polynomial out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    Monomial nm = m;
    std::swap(nm.exps[i], nm.exps[j]);
    out.add_term(nm, c);
  }
  return out;
}

// Direct expansion: each variable becomes its row's linear form, raised to
// the needed powers by squaring. Used when m is singular.
Polynomial substitute_expanded(const Polynomial& f, const Matrix3& m) {
  const auto p = f.modulus();
  std::array<Polynomial, 3> forms{Polynomial(p), Polynomial(p), Polynomial(p)};
  for (std::size_t i = 0; i < 3; ++i) forms[i] = Polynomial::linear(p, m.raw(i, 0), m.raw(i, 1), m.raw(i, 2));
  std::array<std::map<std::uint32_t, Polynomial>, 3> powers;
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto it = powers[i].find(e);
    if (it == powers[i].end()) it = powers[i].emplace(e, forms[i].pow(e)).first;
    return it->second;
  };
  Polynomial out(p);
  for (const auto& [mono, c] : f.terms()) {
    Polynomial t = Polynomial::constant(p, c);
    for (std::size_t i = 0; i < 3; ++i) {
      if (mono.exps[i] > 0) t *= power(i, mono.exps[i]);
    }
    out += t;
  }
  return out;
}

}  // namespace

Polynomial substitute_linear(const Polynomial& f, const Matrix3& m) {
  require_same_modulus(f.modulus(), m.modulus());
  if (m.is_identity() || f.is_zero()) return f;
  if (m.determinant().is_zero()) return substitute_expanded(f, m);

  // Reduce m to E by row operations R_k ... R_1 m = E, so that
  // m = R_1^-1 ... R_k^-1 and f(m v) is the chain of elementary substitutions
  // R_1^-1 first. Each R_i^-1 is again elementary.
  const auto p = m.modulus();
  std::array<std::array<std::uint32_t, 3>, 3> a{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) a[r][c] = m.raw(r, c);
  }
  Polynomial g = f;
  for (std::size_t c = 0; c < 3; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      g = swap_vars(g, piv, c);
    }
    const std::uint32_t lead = a[c][c];
    if (lead != 1) {
      const std::uint32_t inv = p.inv(lead);
      for (auto& v : a[c]) v = p.mul(v, inv);
      g = scale(g, c, lead);
    }
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const std::uint32_t t = a[r][c];
      for (std::size_t k = 0; k < 3; ++k) a[r][k] = p.sub(a[r][k], p.mul(t, a[c][k]));
      // R = E - t e_r e_c^T, so R^-1 = E + t e_r e_c^T: x_r -> x_r + t x_c.
      g = shear(g, r, c, t);
    }
  }
  return g;
}

FieldElement evaluate(const Polynomial& f, const std::array<FieldElement, 3>& point) {
  const auto p = f.modulus();
  for (const auto& v : point) require_same_modulus(p, v.modulus());
  std::uint32_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t t = c;
    for (std::size_t i = 0; i < 3; ++i) t = p.mul(t, p.pow(point[i].value(), m.exps[i]));
    acc = p.add(acc, t);
  }
  return FieldElement::raw(p, acc);
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  static constexpr char names[3] = {'x', 'y', 'z'};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    bool need_star = false;
    if (c != 1 || m.degree() == 0) {
      os << c;
      need_star = true;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (m.exps[i] == 0) continue;
      if (need_star) os << '*';
      os << names[i];
      if (m.exps[i] > 1) os << '^' << m.exps[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << render(f); }

}  // namespace upinv
