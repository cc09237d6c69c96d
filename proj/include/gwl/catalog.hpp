#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwl/group.hpp"

namespace gwl {

struct CatalogEntry {
  std::string name;
  GroupName ctor;
  int order;
};

/// The built-in group collection used by the CLI and the test grids.
const std::vector<CatalogEntry>& catalog();

std::optional<GroupName> catalog_lookup(const std::string& name);

/// Builds the catalog group with the given name; raises ParameterOutOfRange
/// for unknown names.
Group catalog_group(const std::string& name);

}  // namespace gwl
