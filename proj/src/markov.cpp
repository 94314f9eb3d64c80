#include "frobmark/markov.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "frobmark/error.hpp"

namespace frobmark {

bool is_markov(const Int& x, const Int& y, const Int& z) {
  if (x <= 0 || y <= 0 || z <= 0) return false;
  return x * x + y * y + z * z == 3 * x * y * z;
}

MarkovTriple::MarkovTriple(Int a, Int b, Int c) : v_{std::move(a), std::move(b), std::move(c)} {
  std::sort(v_.begin(), v_.end());
  if (!is_markov(v_[0], v_[1], v_[2])) {
    throw Error(ErrorKind::InvalidParameter, "not a Markov triple: " + str());
  }
}

std::strong_ordering operator<=>(const MarkovTriple& a, const MarkovTriple& b) {
  for (int i = 2; i >= 0; --i) {
    const int c = cmp(a.v_[static_cast<std::size_t>(i)], b.v_[static_cast<std::size_t>(i)]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string MarkovTriple::str() const {
  return "(" + to_string(v_[0]) + "," + to_string(v_[1]) + "," + to_string(v_[2]) + ")";
}

MarkovTriple vieta(const MarkovTriple& t, int pos) {
  if (pos < 1 || pos > 3) throw Error(ErrorKind::InvalidParameter, "Vieta position must be 1, 2 or 3");
  const auto i = static_cast<std::size_t>(pos - 1);
  std::array<Int, 3> v{t.x(), t.y(), t.z()};
  const Int other = v[(i + 1) % 3] * v[(i + 2) % 3];
  v[i] = 3 * other - v[i];
  if (v[i] <= 0) throw Error(ErrorKind::InternalError, "Vieta move produced a nonpositive entry from " + t.str());
  return MarkovTriple(v[0], v[1], v[2]);
}

int position_of(const MarkovTriple& t, const Int& value) {
  for (int p = 1; p <= 3; ++p) {
    if (t[p - 1] == value) return p;
  }
  throw Error(ErrorKind::InvalidParameter, to_string(value) + " does not occur in " + t.str());
}

namespace {

struct TripleHash {
  std::size_t operator()(const MarkovTriple& t) const noexcept {
    IntHash h;
    return h(t.x()) * 1000003U ^ h(t.y()) * 8191U ^ h(t.z());
  }
};

}  // namespace

std::vector<MarkovTriple> enumerate_tree(const Int& max_z) {
  if (max_z < 1) throw Error(ErrorKind::InvalidParameter, "max_z must be >= 1");
  const MarkovTriple root(1, 1, 1);
  std::unordered_set<MarkovTriple, TripleHash> seen{root};
  std::deque<MarkovTriple> frontier{root};
  while (!frontier.empty()) {
    const MarkovTriple t = frontier.front();
    frontier.pop_front();
    for (int pos = 1; pos <= 3; ++pos) {
      MarkovTriple next = vieta(t, pos);
      // along every tree path the maximum only grows, so pruning keeps all solutions
      if (next.z() > max_z) continue;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<MarkovTriple> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<RawTriple, RawTriple>> max_collisions(std::vector<RawTriple> triples) {
  for (auto& t : triples) std::sort(t.begin(), t.end());
  std::sort(triples.begin(), triples.end(), [](const RawTriple& a, const RawTriple& b) {
    return std::tie(a[2], a[1], a[0]) < std::tie(b[2], b[1], b[0]);
  });
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  std::vector<std::pair<RawTriple, RawTriple>> out;
  for (std::size_t i = 1; i < triples.size(); ++i) {
    if (triples[i][2] == triples[i - 1][2]) out.emplace_back(triples[i - 1], triples[i]);
  }
  return out;
}

Verdict uniqueness_scan(const Int& max_z) {
  Verdict v{"uniqueness", true, "exhaustive"};
  const auto triples = enumerate_tree(max_z);
  v.checked = triples.size();
  v.details["max_z"] = to_string(max_z);
  v.details["triples"] = triples.size();
  std::vector<RawTriple> raw;
  raw.reserve(triples.size());
  for (const auto& t : triples) raw.push_back({t.x(), t.y(), t.z()});
  const auto collisions = max_collisions(std::move(raw));
  v.details["collisions"] = collisions.size();
  if (!collisions.empty()) {
    const auto& [a, b] = collisions.front();
    auto text = [](const RawTriple& t) {
      return "(" + to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]) + ")";
    };
    v.fail("collision: " + text(a) + " and " + text(b));
  }
  return v;
}

std::vector<Int> markov_numbers(std::span<const MarkovTriple> triples) {
  std::vector<Int> out;
  for (const auto& t : triples) {
    out.push_back(t.x());
    out.push_back(t.y());
    out.push_back(t.z());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json triple_to_json(const MarkovTriple& t) {
  return {{"x", to_string(t.x())}, {"y", to_string(t.y())}, {"z", to_string(t.z())}};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void require_prime(int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorKind::InvalidParameter, std::to_string(p) + " is not prime");
  }
  if (p > kMaxModPrime) {
    throw Error(ErrorKind::InvalidParameter, "p must be <= " + std::to_string(kMaxModPrime) + " (brute force is p^3)");
  }
}

// Brute force over all p^3 residue triples.
template <typename Pred>
std::vector<ModTriple> scan(int p, Pred&& pred) {
  std::vector<ModTriple> out;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      for (long z = 0; z < p; ++z) {
        if (pred(x, y, z)) out.push_back({static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ModTriple> modp_solutions(int p) {
  require_prime(p);
  return scan(p, [p](long x, long y, long z) {
    if (x == 0 && y == 0 && z == 0) return false;
    return ((x * x + y * y + z * z - 3 * (x * y % p) * z) % p + p) % p == 0;
  });
}

std::vector<ModTriple> modp_orbit(int p) {
  require_prime(p);
  const auto pp = static_cast<std::size_t>(p);
  auto key = [pp](const ModTriple& t) {
    return (static_cast<std::size_t>(t.x) * pp + static_cast<std::size_t>(t.y)) * pp + static_cast<std::size_t>(t.z);
  };
  std::vector<bool> seen(pp * pp * pp, false);
  std::vector<ModTriple> out;
  std::deque<ModTriple> frontier;
  auto visit = [&](const ModTriple& t) {
    const std::size_t k = key(t);
    if (seen[k]) return;
    seen[k] = true;
    out.push_back(t);
    frontier.push_back(t);
  };
  visit({1 % p, 1 % p, 1 % p});
  const long m = p;
  auto flip = [m](long c, long a, long b) { return static_cast<int>(((3 * (a * b % m) - c) % m + m) % m); };
  while (!frontier.empty()) {
    const ModTriple t = frontier.front();
    frontier.pop_front();
    visit({flip(t.x, t.y, t.z), t.y, t.z});
    visit({t.x, flip(t.y, t.x, t.z), t.z});
    visit({t.x, t.y, flip(t.z, t.x, t.y)});
    visit({t.y, t.x, t.z});
    visit({t.x, t.z, t.y});
    visit({t.z, t.y, t.x});
    visit({t.y, t.z, t.x});
    visit({t.z, t.x, t.y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModpReport strong_approx_check(int p) {
  const auto sols = modp_solutions(p);
  const auto orbit = modp_orbit(p);
  std::vector<ModTriple> nonzero;
  std::copy_if(sols.begin(), sols.end(), std::back_inserter(nonzero), [](const ModTriple& t) { return !t.has_zero(); });
  ModpReport r;
  r.p = p;
  r.solutions = sols.size();
  r.solutions_nonzero_coords = nonzero.size();
  r.orbit = orbit.size();
  r.orbit_subset = std::includes(sols.begin(), sols.end(), orbit.begin(), orbit.end());
  r.equal = orbit == sols;
  r.equal_nonzero_coords = orbit == nonzero;
  return r;
}

nlohmann::json modp_report_json(const ModpReport& r) {
  return {{"p", r.p},
          {"solutions", r.solutions},
          {"solutions_nonzero_coords", r.solutions_nonzero_coords},
          {"orbit", r.orbit},
          {"equal", r.equal},
          {"equal_nonzero_coords", r.equal_nonzero_coords},
          {"orbit_subset", r.orbit_subset}};
}

std::vector<ModTriple> mordell_modp_solutions(int p) {
  require_prime(p);
  return scan(p, [p](long x, long y, long z) {
    return ((x * x + y * y + z * z - 2 * (x * y % p) * z - 1) % p + p) % p == 0;
  });
}

}  // namespace frobmark
