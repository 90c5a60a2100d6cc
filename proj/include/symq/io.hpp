#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symq/algebra.hpp"
#include "symq/diagram.hpp"
#include "symq/presentation.hpp"

namespace symq {

// Quandle tables: {"n": int, "op": [[int]], "rho": [int] optional}
std::pair<QuandleTable, std::optional<std::vector<int>>> load_table_json(
    const std::string& text);
QuandleTable load_quandle_json(const std::string& text);
SymmetricQuandleTable load_symmetric_quandle_json(const std::string& text);
std::string save_quandle_json(const QuandleTable& t);
std::string save_symmetric_quandle_json(const SymmetricQuandleTable& s);
std::string table_text(const RackTable& t);  // rows of space-separated indices

// Groups: {"n": int, "mul": [[int]], "identity": int opt, "inverse": [int] opt}
GroupTable load_group_json(const std::string& text);
std::string save_group_json(const GroupTable& g);

// Diagrams: {"dimension": int, "m": int, "labels": [str]?, "strata": [...]}
Diagram load_diagram_json(const std::string& text);
std::string save_diagram_json(const Diagram& d);

// Presentations. Text form:
//   flavor symmetric-quandle
//   gen x1 x2 x3
//   rel x3^x2 = x1
// with '#' comments; JSON mirror uses the same element strings.
SymQuandlePresentation parse_presentation(const std::string& text);
std::string presentation_text(const SymQuandlePresentation& p);
SymQuandlePresentation load_presentation_json(const std::string& text);
std::string save_presentation_json(const SymQuandlePresentation& p);

/// Accepts either form, keyed on the leading character.
SymQuandlePresentation load_presentation(const std::string& text);

// Group presentations, relator-list form.
std::string group_presentation_text(const GroupPresentation& g);
std::string save_group_presentation_json(const GroupPresentation& g);

/// Named targets: triv-<k>, R<n>-id, D-triv-<k>, D-R<n>, conj-S3-inv.
SymmetricQuandleTable builtin_target(const std::string& name);

/// The built-in names of order <= max_order, sorted by (order, name).
std::vector<std::string> builtin_target_names(int max_order);

}  // namespace symq
