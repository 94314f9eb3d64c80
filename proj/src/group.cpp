#include "frobmark/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "frobmark/error.hpp"

namespace frobmark {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), order_(static_cast<int>(table.size())) {
  const int n = order_;
  if (n < 1 || n > kMaxGroupOrder) {
    throw Error(ErrorKind::InvalidParameter,
                "group order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGroupOrder));
  }
  table_.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::ValidationError, "table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(ErrorKind::ValidationError, "table entry out of range");
      table_.push_back(v);
    }
  }

  for (int j = 0; j < n; ++j) {
    if (mul(0, j) != j || mul(j, 0) != j) {
      throw Error(ErrorKind::ValidationError, "identity: element 0 is not a two-sided identity");
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_seen(static_cast<std::size_t>(n)), col_seen(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      auto r = static_cast<std::size_t>(mul(i, j));
      auto c = static_cast<std::size_t>(mul(j, i));
      if (row_seen[r] || col_seen[c]) {
        throw Error(ErrorKind::ValidationError, "Latin square violated at row/column " + std::to_string(i));
      }
      row_seen[r] = col_seen[c] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = mul(i, j);
      for (int k = 0; k < n; ++k) {
        if (mul(ij, k) != mul(i, mul(j, k))) {
          throw Error(ErrorKind::ValidationError, "associativity fails at (" + std::to_string(i) + "," +
                                                      std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == 0) inv_[static_cast<std::size_t>(i)] = j;
    }
    const int v = inv_[static_cast<std::size_t>(i)];
    if (v < 0 || mul(v, i) != 0) throw Error(ErrorKind::ValidationError, "inverse missing for " + std::to_string(i));
  }
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) out[static_cast<std::size_t>(i)].push_back(mul(i, j));
  }
  return out;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order_; ++i) {
    for (int j = i + 1; j < order_; ++j) {
      if (mul(i, j) != mul(j, i)) return false;
    }
  }
  return true;
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjClasses out;
  out.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (out.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      const int y = g.mul(g.mul(h, x), g.inv(h));
      if (out.class_of[static_cast<std::size_t>(y)] < 0) {
        out.class_of[static_cast<std::size_t>(y)] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  return out;
}

namespace {

using Table = std::vector<std::vector<int>>;

Table square(int n) { return Table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n))); }

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

FiniteGroup make_cyclic(int n) {
  if (n < 1 || n > kMaxGroupOrder) throw Error(ErrorKind::InvalidParameter, "make_cyclic: n must be in 1..64");
  auto t = square(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), std::move(t));
}

FiniteGroup make_dihedral(int n) {
  if (n < 2 || 2 * n > kMaxGroupOrder) throw Error(ErrorKind::InvalidParameter, "make_dihedral: n must be in 2..32");
  auto t = square(2 * n);
  // s^f r^a * s^g r^b = s^(f+g) r^((g ? -a : a) + b)
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) {
      const int f = x / n, a = x % n, g = y / n, b = y % n;
      const int r = mod((g != 0 ? -a : a) + b, n);
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ((f + g) % 2) * n + r;
    }
  }
  return FiniteGroup("D" + std::to_string(n), std::move(t));
}

FiniteGroup make_quaternion() {
  auto t = square(8);
  // b^f a^k * b^g a^l = b^(f+g) a^((g ? -k : k) + l), with b^2 = a^2
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int f = x / 4, k = x % 4, g = y / 4, l = y % 4;
      int r = (g != 0 ? -k : k) + l;
      int bf = f + g;
      if (bf == 2) {
        bf = 0;
        r += 2;
      }
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = bf * 4 + mod(r, 4);
    }
  }
  return FiniteGroup("Q8", std::move(t));
}

FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 4) throw Error(ErrorKind::InvalidParameter, "make_symmetric: n must be in 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto t = square(order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (std::size_t x = 0; x < c.size(); ++x) {
        c[x] = perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(perms[static_cast<std::size_t>(j)][x])];
      }
      const auto it = std::find(perms.begin(), perms.end(), c);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(it - perms.begin());
    }
  }
  return FiniteGroup("S" + std::to_string(n), std::move(t));
}

FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int a = g.order(), b = h.order();
  if (a * b > kMaxGroupOrder) throw Error(ErrorKind::InvalidParameter, "make_product: order exceeds 64");
  auto t = square(a * b);
  for (int x = 0; x < a * b; ++x) {
    for (int y = 0; y < a * b; ++y) {
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
    }
  }
  return FiniteGroup(g.name() + "x" + h.name(), std::move(t));
}

FiniteGroup builtin_group(const std::string& name) {
  if (name == "V4") return make_product(make_cyclic(2), make_cyclic(2));
  if (name == "Q8") return make_quaternion();
  if (const auto cross = name.find('x'); cross != std::string::npos) {
    return make_product(builtin_group(name.substr(0, cross)), builtin_group(name.substr(cross + 1)));
  }
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D' || name[0] == 'S')) {
    const auto digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() <= 3) {
      const int n = std::stoi(digits);
      if (name[0] == 'Z') return make_cyclic(n);
      if (name[0] == 'D') return make_dihedral(n);
      return make_symmetric(n);
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown group '" + name + "'");
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  return nlohmann::json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  std::string name;
  int order = 0;
  Table table;
  try {
    name = j.at("name").get<std::string>();
    order = j.at("order").get<int>();
    table = j.at("table").get<Table>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("group file: ") + e.what());
  }
  if (static_cast<int>(table.size()) != order) {
    throw Error(ErrorKind::ValidationError, "order field does not match table size");
  }
  return FiniteGroup(std::move(name), std::move(table));
}

FiniteGroup load_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return group_from_json(j);
}

void save_group(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidParameter, "cannot write " + path.string());
  out << group_to_json(g).dump() << '\n';
}

}  // namespace frobmark
