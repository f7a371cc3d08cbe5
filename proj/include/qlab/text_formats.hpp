#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qlab/finite_module.hpp"
#include "qlab/fuzzy_transform.hpp"
#include "qlab/morphology.hpp"
#include "qlab/transforms.hpp"

namespace qlab {

// Plain-text algebra files. Tokens are whitespace separated; '#' starts a
// comment running to the end of the line. Malformed input raises ParseError.
//
//   quantale <n>                    monoid <n>
//   [labels <n names>]              unit <u>
//   join <n x n indices>            product <n x n indices>
//   product <n x n indices>
//   unit <u>
//   [bottom <b>]
//
//   module <m> over <quantale file>   (path relative to this file)
//   join <m x m>  action <|Q| x m>  [bottom <b>]
//
//   kernel <X> <Y> <t-norm name | quantale file>
//   <X x Y entries>  [embed <Y indices into X>]
//
//   se <k>                      partition <l> <n> <t-norm name>
//   <k lines: dx dy weight>     <l x n values>
//
// Unit values use UnitValue::parse ("a/b", decimals, "f:<double>").

QuantaleTables parse_quantale(std::string_view text);
FiniteMonoid parse_monoid(std::string_view text);
struct ParsedModule {
  FiniteQuantale quantale;
  ModuleTables tables;
};
/// `base_dir` resolves the referenced quantale file. The raw form skips the
/// module law check.
ParsedModule parse_module_tables(std::string_view text, const std::string& base_dir);
FiniteModule parse_module(std::string_view text, const std::string& base_dir);

using AnyKernel = std::variant<Kernel<TNormQuantale>, Kernel<FiniteQuantale>>;
AnyKernel parse_kernel(std::string_view text, const std::string& base_dir);

StructuringElement parse_structuring_element(std::string_view text);
FuzzyPartition parse_partition(std::string_view text);

/// First keyword of a text file ("quantale", "module", ...), or "".
std::string leading_keyword(std::string_view text);

/// Reads a text file, raising IoError when it cannot be opened.
std::string read_text_file(const std::string& path);
std::string parent_dir(const std::string& path);

}  // namespace qlab
