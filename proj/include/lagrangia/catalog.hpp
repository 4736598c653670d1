#pragma once

// Knot catalog: built-in seeds plus JSON files of the form
//   [{"name": "5_1", "genus": 2, "seifert": [[-1, 1, 0, 0], ...]}, ...]

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lagrangia/error.hpp"
#include "lagrangia/seifert.hpp"

namespace lagrangia {

inline KnotModel unknot() { return {"unknot", SeifertMatrix(IntMatrix(0, 0))}; }
inline KnotModel trefoil() { return {"trefoil", SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}})}; }
inline KnotModel figure_eight() {
  return {"figure-eight", SeifertMatrix(IntMatrix{{1, 1}, {0, -1}})};
}

class Catalog {
 public:
  static Catalog seeds() {
    Catalog c;
    c.add(unknot());
    c.add(trefoil());
    c.add(figure_eight());
    return c;
  }

  /// Adds or replaces the knot of the same name.
  void add(KnotModel k) {
    for (auto& existing : knots_)
      if (existing.name() == k.name()) {
        existing = std::move(k);
        return;
      }
    knots_.push_back(std::move(k));
  }

  const std::vector<KnotModel>& knots() const noexcept { return knots_; }

  const KnotModel* find(std::string_view name) const {
    for (const auto& k : knots_)
      if (k.name() == name) return &k;
    return nullptr;
  }

  const KnotModel& at(std::string_view name) const {
    if (const auto* k = find(name)) return *k;
    throw error(errc::catalog, "unknown knot '" + std::string(name) + "'");
  }

  /// Parses catalog text; entries are merged over the seeds (file wins).
  static Catalog parse(std::string_view text, const std::string& source = "<catalog>") {
    using nlohmann::json;
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
      throw error(errc::catalog, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                     ": malformed JSON (" + e.what() + ")");
    }
    if (!doc.is_array()) throw error(errc::catalog, source + ":1: top level must be an array");

    const std::vector<std::size_t> lines = entry_lines(text);
    Catalog cat = seeds();
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const std::string where = source + ":" +
                                std::to_string(i < lines.size() ? lines[i] : std::size_t{1}) +
                                ": entry " + std::to_string(i);
      const json& entry = doc[i];
      if (!entry.is_object()) throw error(errc::catalog, where + ": expected an object");

      const auto name_it = entry.find("name");
      if (name_it == entry.end() || !name_it->is_string() || name_it->get<std::string>().empty())
        throw error(errc::catalog, where + ": field 'name' must be a nonempty string");
      const std::string name = name_it->get<std::string>();
      const std::string at = where + " (\"" + name + "\")";
      if (!seen.insert(name).second) throw error(errc::catalog, at + ": duplicate name");

      const auto genus_it = entry.find("genus");
      if (genus_it == entry.end() || !genus_it->is_number_integer() || genus_it->get<long long>() < 0)
        throw error(errc::catalog, at + ": field 'genus' must be a nonnegative integer");
      const auto dim = static_cast<std::size_t>(2 * genus_it->get<long long>());

      const auto v_it = entry.find("seifert");
      if (v_it == entry.end() || !v_it->is_array())
        throw error(errc::catalog, at + ": field 'seifert' must be an array of rows");
      if (v_it->size() != dim)
        throw error(errc::catalog, at + ": field 'seifert' has " + std::to_string(v_it->size()) +
                                       " rows, expected 2*genus = " + std::to_string(dim));
      IntMatrix v(dim, dim);
      for (std::size_t r = 0; r < dim; ++r) {
        const json& row = (*v_it)[r];
        if (!row.is_array() || row.size() != dim)
          throw error(errc::catalog, at + ": field 'seifert' row " + std::to_string(r) +
                                         " must have " + std::to_string(dim) + " entries");
        for (std::size_t c = 0; c < dim; ++c) {
          if (!row[c].is_number_integer())
            throw error(errc::catalog, at + ": field 'seifert'[" + std::to_string(r) + "][" +
                                           std::to_string(c) + "] must be an integer");
          v(r, c) = row[c].get<long long>();
        }
      }
      try {
        cat.add(KnotModel(name, SeifertMatrix(std::move(v))));
      } catch (const error& e) {
        throw error(errc::catalog, at + ": field 'seifert': " + e.what());
      }
    }
    return cat;
  }

  static Catalog load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::catalog, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
  }

 private:
  static std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t pos) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  /// 1-based line of each top-level array element.
  static std::vector<std::size_t> entry_lines(std::string_view text) {
    std::vector<std::size_t> lines;
    std::size_t line = 1;
    int depth = 0;
    bool in_string = false, escaped = false, expect_value = false;
    for (char ch : text) {
      if (ch == '\n') ++line;
      if (in_string) {
        if (escaped)
          escaped = false;
        else if (ch == '\\')
          escaped = true;
        else if (ch == '"')
          in_string = false;
        continue;
      }
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
      if (depth == 1 && expect_value && ch != ']') {
        lines.push_back(line);
        expect_value = false;
      }
      switch (ch) {
        case '"': in_string = true; break;
        case '[':
        case '{':
          ++depth;
          if (depth == 1) expect_value = true;
          break;
        case ']':
        case '}': --depth; break;
        case ',':
          if (depth == 1) expect_value = true;
          break;
        default: break;
      }
    }
    return lines;
  }

  std::vector<KnotModel> knots_;
};

}  // namespace lagrangia
