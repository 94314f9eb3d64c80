#include "frobmark/char_table.hpp"

#include <fstream>
#include <map>
#include <string_view>

#include <nlohmann/json.hpp>

#include "frobmark/error.hpp"

namespace frobmark {

namespace detail {
const std::map<std::string, std::string_view>& builtin_table_sources();
}

void validate_char_table(const CharTable& t) {
  const auto& g = *t.group;
  const auto n = static_cast<std::size_t>(g.order());
  if (t.rows.size() != t.classes.size()) {
    throw Error(ErrorKind::ValidationError, "row count " + std::to_string(t.rows.size()) +
                                                " differs from class count " + std::to_string(t.classes.size()));
  }
  long square_sum = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.chi.values.size() != n) throw Error(ErrorKind::ValidationError, "character has wrong length");
    if (!(*row.chi.group == g)) throw Error(ErrorKind::ValidationError, "character on a different group");
    if (row.degree < 1 || !(row.chi(0) == Cyclo(row.degree))) {
      throw Error(ErrorKind::ValidationError, "chi(e) differs from the degree in row " + std::to_string(r));
    }
    for (std::size_t x = 0; x < n; ++x) {
      const auto& cls = t.classes.classes[static_cast<std::size_t>(t.classes.class_of[x])];
      if (!(row.chi.values[x] == row.chi.values[static_cast<std::size_t>(cls.front())])) {
        throw Error(ErrorKind::ValidationError, "row " + std::to_string(r) + " is not constant on conjugacy classes");
      }
    }
    square_sum += static_cast<long>(row.degree) * row.degree;
  }
  if (square_sum != static_cast<long>(n)) {
    throw Error(ErrorKind::ValidationError, "degree squares sum to " + std::to_string(square_sum) + ", not |G|");
  }
  // Orthogonality over classes: (1/|G|) sum_C |C| chi_i(C) conj(chi_j(C)) = delta_ij.
  std::vector<std::vector<Cyclo>> conjugated(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (const auto& cls : t.classes.classes) {
      conjugated[i].push_back(t.rows[i].chi(cls.front()).conj());
    }
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = i; j < t.rows.size(); ++j) {
      Cyclo acc;
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        const auto& cls = t.classes.classes[c];
        acc += Cyclo(static_cast<int>(cls.size())) * t.rows[i].chi(cls.front()) * conjugated[j][c];
      }
      if (!(acc == Cyclo(i == j ? static_cast<int>(n) : 0))) {
        throw Error(ErrorKind::ValidationError,
                    "orthogonality fails for rows " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

CharTable char_table_from_json(const nlohmann::json& j, GroupPtr group) {
  CharTable t{group, conjugacy_classes(*group), {}};
  try {
    if (j.at("group").get<std::string>() != group->name()) {
      throw Error(ErrorKind::ValidationError, "table is for group '" + j.at("group").get<std::string>() + "'");
    }
    if (j.contains("classes")) {
      auto listed = j.at("classes").get<std::vector<std::vector<int>>>();
      for (auto& c : listed) std::sort(c.begin(), c.end());
      if (listed != t.classes.classes) {
        throw Error(ErrorKind::ValidationError, "listed classes differ from the conjugacy classes of " + group->name());
      }
    }
    for (const auto& c : j.at("chars")) {
      Character row{c.at("degree").get<int>(), ClassFunction{group, {}}};
      for (const auto& v : c.at("values")) row.chi.values.push_back(v.get<Cyclo>());
      t.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("character table: ") + e.what());
  }
  validate_char_table(t);
  return t;
}

CharTable char_table_from_json(const nlohmann::json& j) {
  std::string name;
  try {
    name = j.at("group").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("character table: ") + e.what());
  }
  return char_table_from_json(j, std::make_shared<const FiniteGroup>(builtin_group(name)));
}

nlohmann::json char_table_to_json(const CharTable& t) {
  auto chars = nlohmann::json::array();
  for (const auto& row : t.rows) chars.push_back({{"degree", row.degree}, {"values", row.chi.values}});
  return nlohmann::json{{"group", t.group->name()}, {"classes", t.classes.classes}, {"chars", chars}};
}

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

CharTable cyclic_char_table(int n) {
  auto group = std::make_shared<const FiniteGroup>(make_cyclic(n));
  CharTable t{group, conjugacy_classes(*group), {}};
  for (int j = 0; j < n; ++j) {
    Character row{1, ClassFunction{group, {}}};
    for (int g = 0; g < n; ++g) row.chi.values.push_back(zeta(n, static_cast<long>(j) * g));
    t.rows.push_back(std::move(row));
  }
  validate_char_table(t);
  return t;
}

}  // namespace

CharTable load_char_table(const std::filesystem::path& path) { return char_table_from_json(read_json(path)); }

CharTable load_char_table(const std::filesystem::path& path, GroupPtr group) {
  return char_table_from_json(read_json(path), std::move(group));
}

CharTable product_char_table(const CharTable& a, const CharTable& b) {
  auto group = std::make_shared<const FiniteGroup>(make_product(*a.group, *b.group));
  const int nb = b.group->order();
  CharTable t{group, conjugacy_classes(*group), {}};
  for (const auto& ra : a.rows) {
    for (const auto& rb : b.rows) {
      Character row{ra.degree * rb.degree, ClassFunction{group, {}}};
      for (int x = 0; x < group->order(); ++x) row.chi.values.push_back(ra.chi(x / nb) * rb.chi(x % nb));
      t.rows.push_back(std::move(row));
    }
  }
  validate_char_table(t);
  return t;
}

CharTable builtin_char_table(const std::string& name) {
  const auto& sources = detail::builtin_table_sources();
  if (auto it = sources.find(name); it != sources.end()) {
    return char_table_from_json(nlohmann::json::parse(it->second));
  }
  if (name == "V4") return builtin_char_table("Z2xZ2");
  if (const auto cross = name.find('x'); cross != std::string::npos) {
    return product_char_table(builtin_char_table(name.substr(0, cross)), builtin_char_table(name.substr(cross + 1)));
  }
  if (name.size() >= 2 && name[0] == 'Z') {
    const auto group = builtin_group(name);
    return cyclic_char_table(group.order());
  }
  throw Error(ErrorKind::InvalidParameter, "no character table for '" + name + "'");
}

bool tables_coincide(const CharTable& a, const CharTable& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].degree != b.rows[i].degree || a.rows[i].chi.values != b.rows[i].chi.values) return false;
  }
  return true;
}

}  // namespace frobmark
