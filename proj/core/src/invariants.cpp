#include "upinv/invariants.hpp"

#include <algorithm>
#include <string>

#include "upinv/action.hpp"
#include "upinv/errors.hpp"
#include "upinv/linalg.hpp"

namespace upinv {

std::string_view to_string(FalsifierVerdict v) noexcept {
  return v == FalsifierVerdict::NonPolynomialCertified ? "NonPolynomialCertified" : "Inconclusive";
}

std::string_view to_string(HsopStatus s) noexcept {
  return s == HsopStatus::Certified ? "Certified" : "Unknown";
}

std::vector<Polynomial> invariant_basis(PrimeModulus p, std::span<const Matrix3> acting, std::uint32_t d) {
  const auto basis = monomial_basis(d);
  const std::size_t n = basis.size();
  ResidueMatrix system(p, 0, n);
  std::vector<std::uint32_t> row(n);
  for (const auto& h : acting) {
    require_same_modulus(p, h.modulus());
    if (h.is_identity()) continue;
    // Column j holds h . m_j - m_j in the monomial basis.
    ResidueMatrix block(p, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto image = apply(h, Polynomial::term(p, 1, basis[j]));
      for (const auto& [m, c] : image.terms()) block.at(monomial_index(m), j) = c;
      block.at(j, j) = p.sub(block.at(j, j), 1);
    }
    for (std::size_t i = 0; i < n; ++i) system.append_row(block.row(i));
  }
  std::vector<Polynomial> out;
  for (const auto& v : nullspace(system)) out.push_back(Polynomial::from_dense(p, d, v));
  return out;
}

std::vector<Polynomial> invariant_basis(const MatrixGroup& g, std::uint32_t d) {
  return invariant_basis(g.modulus(), g.generators(), d);
}

HilbertFunction hilbert_function(const MatrixGroup& g, std::uint32_t max_degree) {
  HilbertFunction hf;
  hf.dims.reserve(max_degree + 1);
  for (std::uint32_t d = 0; d <= max_degree; ++d) hf.dims.push_back(invariant_basis(g, d).size());
  return hf;
}

std::vector<std::size_t> product_series(std::span<const std::uint32_t> degrees, std::uint32_t max_degree) {
  std::vector<std::size_t> series(max_degree + 1, 0);
  series[0] = 1;
  for (auto d : degrees) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "generator degree must be positive");
    // Multiply by 1/(1 - t^d): running sum with stride d.
    for (std::size_t k = d; k <= max_degree; ++k) series[k] += series[k - d];
  }
  return series;
}

std::optional<std::uint32_t> power_membership_exponent(std::span<const Polynomial> polys, Var v,
                                                       std::uint32_t n_max) {
  if (polys.empty()) return std::nullopt;
  const auto p = polys.front().modulus();
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    ResidueMatrix span(p, 0, monomial_count(n));
    for (const auto& f : polys) {
      const int df = f.degree();
      if (df < 0 || static_cast<std::uint32_t>(df) > n) continue;
      for (const auto& m : monomial_basis(n - df)) {
        span.append_row((Polynomial::term(p, 1, m) * f).dense(n));
      }
    }
    const auto ech = row_reduce(std::move(span));
    if (ech.contains(Polynomial::term(p, 1, Monomial::of(v, n)).dense(n))) return n;
  }
  return std::nullopt;
}

HsopCertificate hsop_check(const MatrixGroup& g, const std::array<Polynomial, 3>& polys,
                           std::optional<std::uint32_t> n_max) {
  HsopCertificate cert;
  cert.polys.assign(polys.begin(), polys.end());
  cert.group_order = g.order();
  for (std::size_t i = 0; i < 3; ++i) {
    require_same_modulus(g.modulus(), polys[i].modulus());
    if (!polys[i].is_homogeneous()) {
      throw Error(ErrorCode::NotHomogeneous, "polynomial " + render(polys[i]) + " is not homogeneous");
    }
    if (!is_invariant(g, polys[i])) {
      throw Error(ErrorCode::NotInvariant, "polynomial " + render(polys[i]) + " is not invariant");
    }
    cert.degrees[i] = static_cast<std::uint32_t>(polys[i].degree());
  }
  cert.n_max = n_max.value_or(cert.degrees[0] + cert.degrees[1] + cert.degrees[2]);
  std::size_t found = 0;
  for (std::size_t v = 0; v < 3; ++v) {
    cert.power_exponents[v] = power_membership_exponent(polys, static_cast<Var>(v), cert.n_max);
    if (cert.power_exponents[v]) ++found;
  }
  cert.status = found == 3 ? HsopStatus::Certified : HsopStatus::Unknown;
  const std::size_t product =
      std::size_t{cert.degrees[0]} * cert.degrees[1] * cert.degrees[2];
  cert.degree_product_ok = product == g.order();
  return cert;
}

std::vector<std::array<std::uint32_t, 3>> degree_triples(std::size_t n) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::size_t a = 1; a * a * a <= n; ++a) {
    if (n % a) continue;
    const std::size_t rest = n / a;
    for (std::size_t b = a; b * b <= rest; ++b) {
      if (rest % b) continue;
      out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                     static_cast<std::uint32_t>(rest / b)});
    }
  }
  return out;
}

FalsifierReport hilbert_falsify(const MatrixGroup& g, std::uint32_t max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::InvalidArgument, "falsifier needs max degree >= 1");
  FalsifierReport report;
  report.group_order = g.order();
  report.max_degree = max_degree;
  report.hf = hilbert_function(g, max_degree);
  bool any_survivor = false;
  for (const auto& triple : degree_triples(g.order())) {
    FalsifierCandidate cand{triple, std::nullopt};
    const auto series = product_series(triple, max_degree);
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
      if (series[d] != report.hf.dims[d]) {
        cand.first_mismatch = d;
        break;
      }
    }
    any_survivor = any_survivor || cand.survives();
    report.candidates.push_back(cand);
  }
  report.verdict = any_survivor ? FalsifierVerdict::Inconclusive : FalsifierVerdict::NonPolynomialCertified;
  return report;
}

}  // namespace upinv
