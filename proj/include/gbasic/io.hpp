#ifndef GBASIC_IO_HPP
#define GBASIC_IO_HPP

#include <json.hpp>

#include "gbasic/betti.hpp"
#include "gbasic/cb.hpp"
#include "gbasic/shrink.hpp"

namespace gbasic {

using json = nlohmann::json;

/// File loading with filename-tagged diagnostics (parse_error).
json load_json_file(const std::string& path);

/// {"points": [["1","0","0"], ...]}; coordinate strings are rationals.
PointSet points_from_json(const json& j, const Field& field);
json points_to_json(const PointSet& z);

/// {"num_vars": n, "row_twists": [...], "col_twists": [...],
///  "entries": [[poly strings]]}
ModulePresentation module_from_json(const json& j, const Field& field);
json module_to_json(const ModulePresentation& m);

/// {"degree": d, "coords": [poly strings]} validated against the module.
Section section_from_json(const json& j, const ModulePresentation& m);
json section_to_json(const Section& s);

/// {"sections": [section objects]}
std::vector<Section> sections_from_json(const json& j,
                                        const ModulePresentation& m);
json sections_to_json(const std::vector<Section>& sections);

json betti_to_json(const BettiTable& t);
json cb_report_to_json(const CBReport& r);
json shrink_step_to_json(const ShrinkStep& s);
json transform_to_json(const UnipotentTransform& t);

}  // namespace gbasic

#endif
