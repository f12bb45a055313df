#pragma once

#include <string>

#include "lspec/dyck.hpp"
#include "lspec/enumeration.hpp"

namespace lspec {

/// Trees: {"children": [...], "labels": [...]} in preorder.
std::string tree_to_json(const LabelledPlaneTree& tree);
LabelledPlaneTree tree_from_json(const std::string& text);

/// Paths: [[i, j, h], ...]; the label-only length-zero path is
/// {"steps": [], "root_label": c}.  Parsing accepts either form.
std::string path_to_json(const LambdaDyckPath& path);
LambdaDyckPath path_from_json(const std::string& text);

}  // namespace lspec
