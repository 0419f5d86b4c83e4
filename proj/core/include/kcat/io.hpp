#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kcat/action.hpp"
#include "kcat/algebra.hpp"
#include "kcat/grading.hpp"
#include "kcat/group.hpp"
#include "kcat/lincat.hpp"
#include "kcat/module.hpp"

namespace kcat {

/// All readers throw Error("ParseError", ...) with a location string
/// ("file.json: byte 119: ..." or "file.json: /homs/x|y: ...") on malformed
/// input. Writers emit deterministic JSON: sorted keys, canonical scalar
/// strings.

Group read_group(const std::string& json_text, const std::string& where = "group");
std::string write_group(const Group& g);

LinCatPtr read_category(const std::string& json_text, const std::string& where = "category");
std::string write_category(const LinCat& c);

GAction read_action(const std::string& json_text, const LinCatPtr& category,
                    const std::string& where = "action");
std::string write_action(const GAction& a);

Grading read_grading(const std::string& json_text, const LinCatPtr& category, const Group& group,
                     const std::string& where = "grading");
std::string write_grading(const Grading& g);

struct LoadedModule {
  Module module;
  bool has_blocks = false;
  std::vector<std::vector<std::vector<std::uint32_t>>> blocks;  // when has_blocks
};
/// Pass the group when graded blocks should be decoded; a file with blocks
/// but no group given is a ParseError.
LoadedModule read_module(const std::string& json_text, const LinCatPtr& category,
                         const Group* group = nullptr, const std::string& where = "module");
std::string write_module(const Module& m);
std::string write_graded_module(const GradedModule& m, const Group& group);

Algebra read_algebra(const std::string& json_text, const std::string& where = "algebra");
std::string write_algebra(const Algebra& a);

AlgebraGrading read_algebra_grading(const std::string& json_text, const Algebra& a,
                                    const Group& group, const std::string& where = "grading");
std::string write_algebra_grading(const Algebra& a, const AlgebraGrading& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// FNV-1a 64-bit content hash, for input fingerprints in reports.
std::uint64_t fnv1a64(const std::string& text);

}  // namespace kcat
