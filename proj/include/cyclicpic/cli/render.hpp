#pragma once

#include <string>

#include "cyclicpic/cli/report_json.hpp"

namespace cyclicpic::cli {

enum class Format { Human, Machine };

// Machine: pretty-printed JSON. Human: indented "key: value" lines; scalar
// and integer arrays stay on one line.
std::string render(const Json& doc, Format format);

}  // namespace cyclicpic::cli
