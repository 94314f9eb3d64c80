#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace frobmark {

inline constexpr int kMaxGroupOrder = 64;

/// Finite group given by its Cayley table. Element 0 is always the identity.
///
/// Construction validates the group axioms exhaustively (Latin square, identity at
/// index 0, associativity, inverses); a FiniteGroup that exists is a group.
class FiniteGroup {
 public:
  /// Throws ValidationError naming the failed axiom, or InvalidParameter when the
  /// order is outside 1..kMaxGroupOrder.
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  std::vector<std::vector<int>> table() const;

  /// Smallest k >= 1 with g^k = e.
  int element_order(int g) const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.name_ == b.name_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjClasses {
  std::vector<std::vector<int>> classes;  // ordered by minimal member; identity class first
  std::vector<int> class_of;

  std::size_t size() const { return classes.size(); }
};

ConjClasses conjugacy_classes(const FiniteGroup& g);

FiniteGroup make_cyclic(int n);
/// Dihedral group of order 2n; elements r^k (index k) then s*r^k (index n + k).
FiniteGroup make_dihedral(int n);
/// Symmetric group on n <= 4 points; permutations in lexicographic order, (gh)(x) = g(h(x)).
FiniteGroup make_symmetric(int n);
/// Quaternion group <a, b | a^4 = 1, b^2 = a^2, b a b^-1 = a^-1>; elements a^k then b*a^k,
/// laid out so its class structure lines up index-for-index with make_dihedral(4).
FiniteGroup make_quaternion();
/// Direct product; element (g, h) has index g * |H| + h.
FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h);

/// Resolves names such as "Z3", "D4", "S3", "Q8", "V4", "Z2xZ2".
FiniteGroup builtin_group(const std::string& name);

FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup load_group(const std::filesystem::path& path);
void save_group(const FiniteGroup& g, const std::filesystem::path& path);

}  // namespace frobmark
