#pragma once

#include <string>

namespace vgx {

// One function-level input record.
struct SourceUnit {
  std::string project_id;
  std::string path;
  std::string function_name;
  std::string text;
};

}  // namespace vgx
