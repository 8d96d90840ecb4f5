#pragma once

// Canonical text of every catalog object, as stored in the data directory.

#include "mfx/catalog.hpp"
#include "mfx/mfx_io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mfx {

struct CatalogFile {
  std::string name;  // file name inside the data directory
  std::string text;
};

inline std::string label_file_part(std::string label) {
  std::string out;
  for (char c : label)
    if (c != '{' && c != '}') out += c;
  return out;
}

inline std::vector<CatalogFile> catalog_files() {
  std::vector<CatalogFile> out;
  for (const auto& n : mf_template_names()) {
    int top = mf_has_ell(n) ? 4 : 1;
    for (int l = 1; l <= top; ++l) out.push_back({mf_file_stem(n, l) + ".mfx", format_mf(get_mf(n, l))});
  }
  for (const auto& m : model_names())
    for (const auto& [label, mod] : get_model(m).modules)
      out.push_back({m + "." + label_file_part(label) + ".mod", format_module(mod)});
  for (int d = 1; d <= 5; ++d) out.push_back({"rao-d" + std::to_string(d) + ".mod", format_module(rao_module(d))});
  return out;
}

/// Canonical text for `catalog dump <name>`: a file name with or without
/// extension, or a model name (all of its modules).
inline std::optional<std::string> catalog_dump(const std::string& name) {
  std::string all;
  for (const auto& f : catalog_files()) {
    auto stem = f.name.substr(0, f.name.rfind('.'));
    if (f.name == name || stem == name) return f.text;
    if (f.name.rfind(name + ".", 0) == 0 && f.name.size() > 4 && f.name.substr(f.name.size() - 4) == ".mod")
      all += "# " + f.name + "\n" + f.text;
  }
  if (all.empty()) return std::nullopt;
  return all;
}

/// Compares each data file against its canonical text; names the first mismatch.
inline Report check_data_dir(const std::string& dir) {
  Report r;
  for (const auto& f : catalog_files()) {
    auto path = (std::filesystem::path(dir) / f.name).string();
    std::string text;
    try {
      text = read_file(path);
    } catch (const std::exception&) {
      r.fail("missing catalog file " + path);
      continue;
    }
    r.expect(text == f.text, "catalog file " + path + (text == f.text ? " matches" : " differs from the catalog"));
  }
  return r;
}

}  // namespace mfx
