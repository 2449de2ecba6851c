#include "gbasic/io.hpp"

#include <fstream>

namespace gbasic {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

namespace {

const json& field_at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_at(const json& j, const char* key) {
  const json& v = field_at(j, key);
  if (!v.is_number_integer())
    throw parse_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list_at(const json& j, const char* key) {
  const json& v = field_at(j, key);
  if (!v.is_array())
    throw parse_error(std::string("field \"") + key + "\" must be a list");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer())
      throw parse_error(std::string("field \"") + key +
                        "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string string_entry(const json& v, const std::string& where) {
  if (!v.is_string())
    throw parse_error(where + ": expected a string");
  return v.get<std::string>();
}

}  // namespace

PointSet points_from_json(const json& j, const Field& field) {
  const json& pts = field_at(j, "points");
  if (!pts.is_array() || pts.empty())
    throw parse_error("\"points\" must be a non-empty list");
  std::vector<ProjPoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& row = pts[i];
    if (!row.is_array() || row.empty())
      throw parse_error("point " + std::to_string(i) +
                        ": expected a coordinate list");
    std::vector<Scalar> coords;
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string text =
          string_entry(row[k], "point " + std::to_string(i) + " coordinate " +
                                   std::to_string(k));
      try {
        coords.push_back(field.parse(text));
      } catch (const error& e) {
        throw parse_error("point " + std::to_string(i) + " coordinate " +
                          std::to_string(k) + ": " + e.what());
      }
    }
    try {
      points.emplace_back(std::move(coords));
    } catch (const error& e) {
      throw parse_error("point " + std::to_string(i) + ": " + e.what());
    }
  }
  return PointSet(std::move(points));
}

json points_to_json(const PointSet& z) {
  json pts = json::array();
  for (const ProjPoint& p : z.points()) {
    json row = json::array();
    for (const Scalar& c : p.coords()) row.push_back(c.str());
    pts.push_back(std::move(row));
  }
  return json{{"points", std::move(pts)}};
}

ModulePresentation module_from_json(const json& j, const Field& field) {
  int n = int_at(j, "num_vars");
  std::vector<int> row_twists = int_list_at(j, "row_twists");
  std::vector<int> col_twists = int_list_at(j, "col_twists");
  const json& rows = field_at(j, "entries");
  if (!rows.is_array())
    throw parse_error("\"entries\" must be a list of rows");
  if (rows.size() != row_twists.size())
    throw parse_error("\"entries\" must have one row per row twist");
  std::vector<std::vector<HomogPoly>> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != col_twists.size())
      throw parse_error("entries row " + std::to_string(i) +
                        " must have one entry per column twist");
    std::vector<HomogPoly> row;
    for (std::size_t k = 0; k < col_twists.size(); ++k) {
      std::string text = string_entry(
          rows[i][k],
          "entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
      int want = col_twists[k] - row_twists[i];
      try {
        row.push_back(HomogPoly::parse(text, n, field, std::max(want, 0)));
      } catch (const error& e) {
        throw parse_error("entry (" + std::to_string(i) + "," +
                          std::to_string(k) + "): " + e.what());
      }
    }
    entries.push_back(std::move(row));
  }
  return ModulePresentation(n, std::move(row_twists), std::move(col_twists),
                            std::move(entries), field);
}

json module_to_json(const ModulePresentation& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.entry(i, k).str());
    rows.push_back(std::move(row));
  }
  return json{{"num_vars", m.num_vars()},
              {"row_twists", m.row_twists()},
              {"col_twists", m.col_twists()},
              {"entries", std::move(rows)}};
}

Section section_from_json(const json& j, const ModulePresentation& m) {
  int d = int_at(j, "degree");
  const json& coords = field_at(j, "coords");
  if (!coords.is_array() || static_cast<int>(coords.size()) != m.rows())
    throw parse_error("\"coords\" must list one polynomial per generator");
  std::vector<HomogPoly> polys;
  for (int i = 0; i < m.rows(); ++i) {
    std::string text =
        string_entry(coords[i], "section component " + std::to_string(i));
    int want = d - m.row_twists()[i];
    try {
      polys.push_back(
          HomogPoly::parse(text, m.num_vars(), m.field(), std::max(want, 0)));
    } catch (const error& e) {
      throw parse_error("section component " + std::to_string(i) + ": " +
                        e.what());
    }
    if (want < 0 && !polys.back().is_zero())
      throw parse_error("section component " + std::to_string(i) +
                        " must be zero (degree would be negative)");
  }
  Section s(d, std::move(polys));
  validate_section(m, s);
  return s;
}

json section_to_json(const Section& s) {
  json coords = json::array();
  for (const HomogPoly& f : s.coords()) coords.push_back(f.str());
  return json{{"degree", s.degree()}, {"coords", std::move(coords)}};
}

std::vector<Section> sections_from_json(const json& j,
                                        const ModulePresentation& m) {
  const json& list = field_at(j, "sections");
  if (!list.is_array() || list.empty())
    throw parse_error("\"sections\" must be a non-empty list");
  std::vector<Section> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      out.push_back(section_from_json(list[i], m));
    } catch (const error& e) {
      throw parse_error("section " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

json sections_to_json(const std::vector<Section>& sections) {
  json list = json::array();
  for (const Section& s : sections) list.push_back(section_to_json(s));
  return json{{"sections", std::move(list)}};
}

json betti_to_json(const BettiTable& t) {
  json betti = json::object();
  for (const auto& [ij, beta] : t.entries) {
    std::string i = std::to_string(ij.first);
    if (!betti.contains(i)) betti[i] = json::object();
    betti[i][std::to_string(ij.second)] = beta;
  }
  return json{{"betti", std::move(betti)},
              {"degree_cap", t.degree_cap},
              {"a_degrees", t.a_degrees},
              {"b_degrees", t.b_degrees}};
}

json cb_report_to_json(const CBReport& r) {
  json history = json::array();
  for (const auto& [l, good] : r.per_degree)
    history.push_back(json{{"degree", l}, {"satisfied", good}});
  return json{{"cb_index", r.cb_index},
              {"a_min", r.a_min},
              {"a_max", r.a_max},
              {"bound_holds", r.bound_holds},
              {"per_degree", std::move(history)}};
}

json shrink_step_to_json(const ShrinkStep& s) {
  json lambdas = json::array();
  for (const Scalar& l : s.lambdas) lambdas.push_back(l.str());
  json realized = json::array();
  for (const HomogPoly& r : s.realized) realized.push_back(r.str());
  return json{{"dropped_index", s.dropped_index},
              {"lambdas", std::move(lambdas)},
              {"dehomogenizer", s.dehomogenizer.str()},
              {"realized", std::move(realized)}};
}

json transform_to_json(const UnipotentTransform& t) {
  json rows = json::array();
  for (int i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.size(); ++j) row.push_back(t.entry(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"size", t.size()},
              {"degrees", t.degrees()},
              {"entries", std::move(rows)}};
}

}  // namespace gbasic
