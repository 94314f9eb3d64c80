#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "frobmark/class_function.hpp"

namespace frobmark {

struct Character {
  int degree = 1;
  ClassFunction chi;
};

/// Irreducible characters of a group, one row per conjugacy class.
struct CharTable {
  GroupPtr group;
  ConjClasses classes;
  std::vector<Character> rows;
};

/// Throws ValidationError naming the first failed invariant: row count equals the
/// class count, chi(e) = degree, class constancy, sum of squared degrees = |G|,
/// and exact row orthogonality.
void validate_char_table(const CharTable& table);

/// Parses the character-table JSON format and validates it against `group`.
CharTable char_table_from_json(const nlohmann::json& j, GroupPtr group);
/// Resolves the group by the file's "group" name (builtin_group).
CharTable char_table_from_json(const nlohmann::json& j);
nlohmann::json char_table_to_json(const CharTable& table);

CharTable load_char_table(const std::filesystem::path& path);
CharTable load_char_table(const std::filesystem::path& path, GroupPtr group);

/// Shipped tables (data/chartables) by group name, cyclic groups generated as
/// chi_j(g) = zeta_n^(j g), and direct products of any of these. Every table is
/// validated before it is returned.
CharTable builtin_char_table(const std::string& name);

/// Table of a direct product G x H (element index g * |H| + h).
CharTable product_char_table(const CharTable& a, const CharTable& b);

/// True when both tables have the same number of rows and row i of one equals
/// row i of the other element by element (values compared by index).
bool tables_coincide(const CharTable& a, const CharTable& b);

}  // namespace frobmark
