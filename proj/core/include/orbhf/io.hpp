#pragma once

// Plain-text structure files.
//
//   typeD | typeA | typeDA          header line
//   gen <name> <i1|i2> [<i1|i2>]    generator; the optional second idempotent
//                                   is the right idempotent of a DA generator
//   edge <from> <to> <label>        type D edge
//   op <gen> ; <label>* -> <gen>    type A operation (no labels: m_1)
//   da <gen> ; <label>* -> <label> <gen>   type DA delta
//   # ...                           comment to end of line
//
// Records are GF(2) summands: a repeated record cancels.

#include <string>
#include <string_view>
#include <variant>

#include "orbhf/structures.hpp"

namespace orbhf {

using AnyStructure = std::variant<TypeDStructure, TypeAStructure, TypeDAStructure>;

/// Throws ParseError, UnknownToken or DuplicateGenerator with the line number.
AnyStructure parse(std::string_view text);

std::string serialize(const TypeDStructure& d);
std::string serialize(const TypeAStructure& a);
std::string serialize(const TypeDAStructure& da);
std::string serialize(const AnyStructure& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// Catalog names: solid-torus, lens:<p>, identity-da, random:<seed>.
bool is_catalog_name(std::string_view name);
AnyStructure catalog_structure(std::string_view name);

/// A catalog name, or otherwise a path to a structure file.
AnyStructure load_structure(const std::string& name_or_path);

}  // namespace orbhf
