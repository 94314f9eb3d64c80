#include "frobmark/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frobmark/error.hpp"

namespace frobmark {
namespace {

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

// Exact division of integer polynomials (ascending coefficients); divisor is monic.
std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Int> q(num.size() - dn, Int(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Int lead = num[i];
    if (lead == 0) continue;
    q[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  return q;
}

// Subfield Q(zeta_d) inside Q(zeta_m): images of zeta_d^i (i < phi(d)) and a
// left inverse on a set of pivot rows, so membership is a solve plus a check.
struct Subfield {
  int d = 1;
  std::vector<std::vector<Int>> columns;  // phi(d) columns of length phi(m)
  std::vector<int> pivots;
  std::vector<std::vector<Rat>> pivot_inverse;  // phi(d) x phi(d)
};

struct FieldTables {
  int m = 1;
  int phi = 1;
  std::vector<std::vector<Int>> power;  // x^k mod Phi_m for k in [0, m)
  std::vector<Subfield> subfields;      // proper, ascending, skipping d = 2 mod 4
};

class TableCache {
 public:
  const FieldTables& get(int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(m);
    if (it != tables_.end()) return *it->second;
    auto built = build(m);
    return *tables_.emplace(m, std::move(built)).first->second;
  }

  const std::vector<Int>& cyclotomic(int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    return cyclotomic_locked(m);
  }

 private:
  const std::vector<Int>& cyclotomic_locked(int m) {
    auto it = polys_.find(m);
    if (it != polys_.end()) return it->second;
    std::vector<Int> num(static_cast<std::size_t>(m) + 1, Int(0));
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (int d : divisors(m)) {
      if (d == m) break;
      num = divide_monic(num, cyclotomic_locked(d));
    }
    return polys_.emplace(m, std::move(num)).first->second;
  }

  std::unique_ptr<FieldTables> build(int m) {
    auto t = std::make_unique<FieldTables>();
    t->m = m;
    const auto& poly = cyclotomic_locked(m);
    t->phi = static_cast<int>(poly.size()) - 1;
    const auto phi = static_cast<std::size_t>(t->phi);

    std::vector<Int> cur(phi, Int(0));
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
      t->power.push_back(cur);
      // multiply by x and reduce by the monic Phi_m
      std::vector<Int> next(phi, Int(0));
      for (std::size_t i = 0; i + 1 < phi; ++i) next[i + 1] = cur[i];
      const Int carry = cur[phi - 1];
      if (carry != 0) {
        for (std::size_t i = 0; i < phi; ++i) next[i] -= carry * poly[i];
      }
      cur = std::move(next);
    }

    for (int d : divisors(m)) {
      if (d == 1 || d == m || d % 4 == 2) continue;
      t->subfields.push_back(build_subfield(*t, d));
    }
    return t;
  }

  Subfield build_subfield(const FieldTables& t, int d) {
    Subfield s;
    s.d = d;
    const int phi_d = static_cast<int>(cyclotomic_locked(d).size()) - 1;
    const int step = t.m / d;
    for (int i = 0; i < phi_d; ++i) s.columns.push_back(t.power[static_cast<std::size_t>(step * i)]);

    // Row-reduce the transpose to pick independent rows of the embedding matrix.
    const auto rows = static_cast<std::size_t>(t.phi);
    const auto cols = static_cast<std::size_t>(phi_d);
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = Rat(s.columns[c][r]);
    }
    // Greedy pivot selection via elimination on a copy.
    std::vector<std::vector<Rat>> basis;
    for (std::size_t r = 0; r < rows && s.pivots.size() < cols; ++r) {
      std::vector<Rat> row = a[r];
      for (const auto& b : basis) {
        // b has a leading one at some column; eliminate that column
        std::size_t lead = 0;
        while (b[lead].is_zero()) ++lead;
        if (!row[lead].is_zero()) {
          const Rat f = row[lead];
          for (std::size_t c = 0; c < cols; ++c) row[c] -= f * b[c];
        }
      }
      std::size_t lead = 0;
      while (lead < cols && row[lead].is_zero()) ++lead;
      if (lead == cols) continue;
      const Rat f = row[lead];
      for (auto& v : row) v /= f;
      for (auto& b : basis) {
        if (!b[lead].is_zero()) {
          const Rat g = b[lead];
          for (std::size_t c = 0; c < cols; ++c) b[c] -= g * row[c];
        }
      }
      basis.push_back(std::move(row));
      s.pivots.push_back(static_cast<int>(r));
    }
    if (s.pivots.size() != cols) throw Error(ErrorKind::InternalError, "degenerate subfield embedding");

    // Invert the square pivot submatrix P (P * coeffs = values at pivot rows).
    std::vector<std::vector<Rat>> p(cols, std::vector<Rat>(2 * cols));
    for (std::size_t r = 0; r < cols; ++r) {
      for (std::size_t c = 0; c < cols; ++c) p[r][c] = a[static_cast<std::size_t>(s.pivots[r])][c];
      p[r][cols + r] = 1;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t piv = c;
      while (p[piv][c].is_zero()) ++piv;
      std::swap(p[piv], p[c]);
      const Rat f = p[c][c];
      for (auto& v : p[c]) v /= f;
      for (std::size_t r = 0; r < cols; ++r) {
        if (r == c || p[r][c].is_zero()) continue;
        const Rat g = p[r][c];
        for (std::size_t k = 0; k < 2 * cols; ++k) p[r][k] -= g * p[c][k];
      }
    }
    s.pivot_inverse.assign(cols, std::vector<Rat>(cols));
    for (std::size_t r = 0; r < cols; ++r) {
      for (std::size_t c = 0; c < cols; ++c) s.pivot_inverse[r][c] = p[r][cols + c];
    }
    return s;
  }

  std::mutex mutex_;
  std::map<int, std::unique_ptr<FieldTables>> tables_;
  std::map<int, std::vector<Int>> polys_;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

const FieldTables& tables(int m) { return cache().get(m); }

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "conductor must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Int>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "conductor must be positive");
  return cache().cyclotomic(m);
}

Cyclo Cyclo::from_powers(int m, const std::vector<Rat>& coeffs) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "conductor must be positive");
  const auto& t = tables(m);
  std::vector<Rat> out(static_cast<std::size_t>(t.phi));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const auto& row = t.power[i % static_cast<std::size_t>(m)];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) out[k] += coeffs[i] * Rat(row[k]);
    }
  }
  Cyclo c(m, std::move(out));
  c.normalize();
  return c;
}

Cyclo zeta(int m, long k) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "zeta: conductor must be positive");
  long e = k % m;
  if (e < 0) e += m;
  std::vector<Rat> coeffs(static_cast<std::size_t>(e) + 1);
  coeffs[static_cast<std::size_t>(e)] = 1;
  return Cyclo::from_powers(m, coeffs);
}

const Rat& Cyclo::to_rat() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidParameter, "value " + str() + " is not rational");
  return coeffs_[0];
}

std::vector<Rat> Cyclo::lifted(int target) const {
  if (target == m_) return coeffs_;
  const auto& t = tables(target);
  const int step = target / m_;
  std::vector<Rat> out(static_cast<std::size_t>(t.phi));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& row = t.power[static_cast<std::size_t>(step) * i];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) out[k] += coeffs_[i] * Rat(row[k]);
    }
  }
  return out;
}

void Cyclo::normalize() {
  if (m_ == 1) return;
  bool rational = true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) {
      rational = false;
      break;
    }
  }
  if (rational) {
    coeffs_.resize(1);
    m_ = 1;
    return;
  }
  const auto& t = tables(m_);
  for (const auto& s : t.subfields) {
    const std::size_t n = s.pivots.size();
    std::vector<Rat> sub(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto& v = coeffs_[static_cast<std::size_t>(s.pivots[c])];
        if (!v.is_zero() && !s.pivot_inverse[r][c].is_zero()) sub[r] += s.pivot_inverse[r][c] * v;
      }
    }
    bool member = true;
    for (std::size_t k = 0; k < coeffs_.size() && member; ++k) {
      Rat acc;
      for (std::size_t c = 0; c < n; ++c) {
        if (s.columns[c][k] != 0 && !sub[c].is_zero()) acc += sub[c] * Rat(s.columns[c][k]);
      }
      member = acc == coeffs_[k];
    }
    if (member) {
      m_ = s.d;
      coeffs_ = std::move(sub);
      return;
    }
  }
}

Cyclo operator-(const Cyclo& a) {
  Cyclo out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (m_ == o.m_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    const int l = std::lcm(m_, o.m_);
    auto a = lifted(l);
    const auto b = o.lifted(l);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    m_ = l;
    coeffs_ = std::move(a);
  }
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.m_ == 1) {
    if (o.coeffs_[0].is_zero()) return *this = Cyclo();
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (m_ == 1) {
    const Rat s = coeffs_[0];
    *this = o;
    if (s.is_zero()) return *this = Cyclo();
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const int l = std::lcm(m_, o.m_);
  const auto a = lifted(l);
  const auto b = o.lifted(l);
  std::vector<Rat> prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) prod[i + j] += a[i] * b[j];
    }
  }
  *this = from_powers(l, prod);
  return *this;
}

Cyclo Cyclo::conj() const {
  if (m_ == 1) return *this;
  std::vector<Rat> powers(static_cast<std::size_t>(m_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    powers[(static_cast<std::size_t>(m_) - i) % static_cast<std::size_t>(m_)] += coeffs_[i];
  }
  return from_powers(m_, powers);
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero cyclotomic");
  if (m_ == 1) return Cyclo(Rat(1) / coeffs_[0]);
  // Solve (multiplication-by-this) * x = 1 over Q.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> shifted(j + n);
    for (std::size_t i = 0; i < n; ++i) shifted[i + j] = coeffs_[i];
    // reduce without normalizing conductor: use the raw power table
    const auto& t = tables(m_);
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      if (shifted[i].is_zero()) continue;
      const auto& row = t.power[i % static_cast<std::size_t>(m_)];
      for (std::size_t k = 0; k < n; ++k) {
        if (row[k] != 0) col[k] += shifted[i] * Rat(row[k]);
      }
    }
    for (std::size_t k = 0; k < n; ++k) a[k][j] = col[k];
  }
  a[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorKind::InternalError, "singular multiplication matrix");
    std::swap(a[piv], a[c]);
    const Rat f = a[c][c];
    for (auto& v : a[c]) v /= f;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rat g = a[r][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= g * a[c][k];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n];
  return from_powers(m_, x);
}

Cyclo Cyclo::pow(long exponent) const {
  Cyclo base = exponent < 0 ? inv() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Cyclo result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1UL;
    if (e != 0) base *= base;
  }
  return result;
}

std::complex<double> Cyclo::embed_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m_);
    acc += coeffs_[i].to_double() * std::polar(1.0, angle);
  }
  return acc;
}

std::string Cyclo::str() const {
  if (m_ == 1) return coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rat mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Rat(1)) os << mag << '*';
    os << 'z' << m_;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

void to_json(nlohmann::json& j, const Cyclo& a) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back({to_string(c.num()), to_string(c.den())});
  j = nlohmann::json{{"m", a.conductor()}, {"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, Cyclo& a) {
  try {
    const int m = j.at("m").get<int>();
    if (m < 1) throw Error(ErrorKind::ParseError, "cyclotomic conductor must be positive");
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.emplace_back(parse_int(c.at(0).get<std::string>()), parse_int(c.at(1).get<std::string>()));
    }
    a = Cyclo::from_powers(m, coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed cyclotomic value: ") + e.what());
  }
}

}  // namespace frobmark
