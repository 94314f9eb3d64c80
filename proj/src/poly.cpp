#include "frobmark/poly.hpp"

#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frobmark/error.hpp"
#include "frobmark/linalg.hpp"

namespace frobmark {

unsigned Monomial::x_degree() const { return std::accumulate(exps.begin(), exps.end(), 0U); }

unsigned Monomial::degree() const { return x_degree() + uexp; }

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.uexp <=> b.uexp; c != 0) return c;
  return a.exps <=> b.exps;
}

namespace {

Monomial unit_monomial(int nvars) { return Monomial{std::vector<std::uint8_t>(static_cast<std::size_t>(nvars), 0), 0}; }

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps.size(); ++i) {
    const unsigned e = unsigned{out.exps[i]} + b.exps[i];
    if (e > 255) throw Error(ErrorKind::SizeLimit, "monomial exponent exceeds 255");
    out.exps[i] = static_cast<std::uint8_t>(e);
  }
  const unsigned ue = unsigned{out.uexp} + b.uexp;
  if (ue > 255) throw Error(ErrorKind::SizeLimit, "u exponent exceeds 255");
  out.uexp = static_cast<std::uint8_t>(ue);
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, const Cyclo& c) {
  MultiPoly p(nvars);
  p.add_term(unit_monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorKind::DimensionError, "variable index out of range");
  MultiPoly p(nvars);
  auto m = unit_monomial(nvars);
  m.exps[static_cast<std::size_t>(index)] = 1;
  p.add_term(m, Cyclo(1));
  return p;
}

MultiPoly MultiPoly::u(int nvars) {
  MultiPoly p(nvars);
  auto m = unit_monomial(nvars);
  m.uexp = 1;
  p.add_term(m, Cyclo(1));
  return p;
}

Cyclo MultiPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Cyclo() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Cyclo& c) {
  if (static_cast<int>(m.exps.size()) != nvars_) throw Error(ErrorKind::DimensionError, "monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool MultiPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) != d) return false;
  }
  return true;
}

bool MultiPoly::has_u() const {
  for (const auto& [m, c] : terms_) {
    if (m.uexp != 0) return true;
  }
  return false;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) {
    throw Error(ErrorKind::DimensionError,
                "polynomials over " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) + " variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Cyclo& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, v] : a.terms_) v = -v;
  return a;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(product(ma, mb), ca * cb);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.str();
    bool negative = false;
    if (c.is_rational() && c.to_rat().sign() < 0) {
      negative = true;
      coeff = (-c).str();
    }
    const bool has_vars = m.degree() != 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    first = false;
    const bool compound = !c.is_rational();
    if (!has_vars) {
      os << (compound ? "(" + coeff + ")" : coeff);
      continue;
    }
    bool need_star = false;
    if (coeff != "1") {
      os << (compound ? "(" + coeff + ")" : coeff);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (m.exps[i] > 1) os << '^' << unsigned{m.exps[i]};
      need_star = true;
    }
    if (m.uexp != 0) {
      if (need_star) os << '*';
      os << 'u';
      if (m.uexp > 1) os << '^' << unsigned{m.uexp};
    }
  }
  return os.str();
}

MultiPoly p_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }

MultiPoly p_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly p_pow(const MultiPoly& a, unsigned k) {
  MultiPoly result = MultiPoly::constant(a.nvars(), Cyclo(1));
  MultiPoly base = a;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

MultiPoly substitute_u(const MultiPoly& p) {
  if (p.has_u()) throw Error(ErrorKind::InvalidParameter, "substitute_u: input already contains u");
  if (p.nvars() < 1) throw Error(ErrorKind::DimensionError, "substitute_u: no identity variable");
  MultiPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    // (x_e + u)^a = sum_i C(a, i) x_e^(a-i) u^i
    const unsigned a = m.exps[0];
    Int binom = 1;
    for (unsigned i = 0; i <= a; ++i) {
      Monomial t = m;
      t.exps[0] = static_cast<std::uint8_t>(a - i);
      t.uexp = static_cast<std::uint8_t>(i);
      out.add_term(t, c * Cyclo(Rat(binom)));
      binom = binom * (a - i) / (i + 1);
    }
  }
  return out;
}

MultiPoly extract_u_coeff(const MultiPoly& q, unsigned j) {
  MultiPoly out(q.nvars());
  for (const auto& [m, c] : q.terms()) {
    if (m.uexp != j) continue;
    Monomial t = m;
    t.uexp = 0;
    out.add_term(t, c);
  }
  return out;
}

Cyclo eval(const MultiPoly& p, std::span<const Cyclo> point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw Error(ErrorKind::DimensionError, "evaluation point has " + std::to_string(point.size()) +
                                               " coordinates, polynomial has " + std::to_string(p.nvars()) +
                                               " variables");
  }
  if (p.has_u()) throw Error(ErrorKind::InvalidParameter, "eval: polynomial still contains u");
  Cyclo acc;
  for (const auto& [m, c] : p.terms()) {
    Cyclo term = c;
    for (std::size_t i = 0; i < m.exps.size() && !term.is_zero(); ++i) {
      if (m.exps[i] != 0) term *= point[i].pow(m.exps[i]);
    }
    acc += term;
  }
  return acc;
}

PolyMatrix::PolyMatrix(int size, int nvars)
    : size_(size), nvars_(nvars), data_(static_cast<std::size_t>(size * size), MultiPoly(nvars)) {}

MultiPoly det_poly_matrix(const PolyMatrix& m) {
  if (m.rows() > kMaxSymbolicDeterminant) {
    throw Error(ErrorKind::SizeLimit, "symbolic determinant of size " + std::to_string(m.rows()) +
                                          " exceeds " + std::to_string(kMaxSymbolicDeterminant) +
                                          "; use factorization verification in evaluation mode instead");
  }
  if (m.rows() == 0) return MultiPoly::constant(m.nvars(), Cyclo(1));
  return laplace_subset_det<MultiPoly>(
      m.rows(), [&](int i, int j) -> const MultiPoly& { return m(i, j); },
      MultiPoly::constant(m.nvars(), Cyclo(1)));
}

nlohmann::json poly_to_json(const MultiPoly& p) {
  auto terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps(m.exps.begin(), m.exps.end());
    terms.push_back({{"exps", exps}, {"u", unsigned{m.uexp}}, {"coeff", c}});
  }
  return nlohmann::json{{"nvars", p.nvars()}, {"terms", terms}};
}

}  // namespace frobmark
