#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "frobmark/rational.hpp"
#include "frobmark/verdict.hpp"

namespace frobmark {

bool is_markov(const Int& x, const Int& y, const Int& z);

/// Positive solution of x^2 + y^2 + z^2 = 3xyz, stored sorted ascending.
class MarkovTriple {
 public:
  /// Sorts the entries; throws InvalidParameter if they do not solve the equation.
  MarkovTriple(Int a, Int b, Int c);

  const Int& x() const { return v_[0]; }
  const Int& y() const { return v_[1]; }
  const Int& z() const { return v_[2]; }
  const Int& operator[](int pos) const { return v_[static_cast<std::size_t>(pos)]; }

  /// Output order: (z, y, x) ascending.
  friend std::strong_ordering operator<=>(const MarkovTriple& a, const MarkovTriple& b);
  friend bool operator==(const MarkovTriple& a, const MarkovTriple& b) { return a.v_ == b.v_; }

  std::string str() const;

 private:
  std::array<Int, 3> v_;
};

/// Vieta move at 1-based position `pos` of the sorted triple: the entry c becomes
/// 3 * (product of the other two) - c and the result is re-sorted. Applying the
/// move again at the new value's position (see position_of) returns t.
MarkovTriple vieta(const MarkovTriple& t, int pos);
/// 1-based position holding `value` in t (first match).
int position_of(const MarkovTriple& t, const Int& value);

/// All Markov triples with max entry <= max_z, ordered by (z, y, x).
std::vector<MarkovTriple> enumerate_tree(const Int& max_z);

using RawTriple = std::array<Int, 3>;

/// Pairs of distinct triples (compared after sorting entries) that share the same
/// maximum. Takes unvalidated triples so the detector can be exercised on
/// injected data.
std::vector<std::pair<RawTriple, RawTriple>> max_collisions(std::vector<RawTriple> triples);
Verdict uniqueness_scan(const Int& max_z);

/// Sorted distinct entries of the given triples.
std::vector<Int> markov_numbers(std::span<const MarkovTriple> triples);

nlohmann::json triple_to_json(const MarkovTriple& t);

// --- residues --------------------------------------------------------------

bool is_prime(std::uint64_t n);

struct ModTriple {
  int x = 0, y = 0, z = 0;
  friend auto operator<=>(const ModTriple&, const ModTriple&) = default;
  bool has_zero() const { return x == 0 || y == 0 || z == 0; }
};

inline constexpr int kMaxModPrime = 997;

/// Ordered residue triples other than (0,0,0) with x^2 + y^2 + z^2 = 3xyz mod p,
/// sorted. Throws InvalidParameter for composite or out-of-range p.
std::vector<ModTriple> modp_solutions(int p);

/// Closure of (1,1,1) under the three Vieta moves and coordinate permutations
/// mod p, sorted.
std::vector<ModTriple> modp_orbit(int p);

struct ModpReport {
  int p = 0;
  std::size_t solutions = 0;                 // excluding only (0,0,0)
  std::size_t solutions_nonzero_coords = 0;  // excluding every triple with a zero entry
  std::size_t orbit = 0;
  bool orbit_subset = false;                 // orbit contained in the solution set
  bool equal = false;                        // orbit == solutions (all-nonzero-triple policy)
  bool equal_nonzero_coords = false;         // orbit == solutions without zero entries
};

ModpReport strong_approx_check(int p);
nlohmann::json modp_report_json(const ModpReport& r);

/// Ordered residue solutions of x^2 + y^2 + z^2 - 2xyz = 1 mod p, sorted.
std::vector<ModTriple> mordell_modp_solutions(int p);

}  // namespace frobmark
