#include "cyclicpic/cli/render.hpp"

#include <sstream>

namespace cyclicpic::cli {

namespace {

bool is_flat(const Json& v) {
  if (v.is_object()) return false;
  if (v.is_array())
    for (const auto& x : v)
      if (!is_flat(x)) return false;
  return true;
}

std::string inline_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    bool first = true;
    for (const auto& x : v) {
      if (!first) s += ", ";
      s += inline_value(x);
      first = false;
    }
    return s + "]";
  }
  return v.dump();
}

void render_human(std::ostringstream& out, const Json& obj, int indent);

void render_entry(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_flat(v)) {
    out << pad << key << ": " << inline_value(v) << '\n';
    return;
  }
  out << pad << key << ":\n";
  if (v.is_object()) {
    render_human(out, v, indent + 2);
    return;
  }
  for (const auto& item : v) {
    out << pad << "  -\n";
    if (item.is_object())
      render_human(out, item, indent + 4);
    else
      out << pad << "    " << inline_value(item) << '\n';
  }
}

void render_human(std::ostringstream& out, const Json& obj, int indent) {
  for (const auto& [key, value] : obj.items()) render_entry(out, key, value, indent);
}

}  // namespace

std::string render(const Json& doc, Format format) {
  if (format == Format::Machine) return doc.dump(2) + "\n";
  std::ostringstream out;
  render_human(out, doc, 0);
  return out.str();
}

}  // namespace cyclicpic::cli
