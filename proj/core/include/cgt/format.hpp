#pragma once

#include <string>
#include <string_view>

#include "cgt/instance.hpp"
#include "cgt/reductions.hpp"

// Line-oriented text formats.
//
// Instance ("cgf"):
//   c <comment>
//   p cgf <ugraph|digraph> <n> <m>
//   q <sp|sop|soc|socp|disp|motj|bfp>
//   e <u> <v> <w>          (w is an integer or p/q; digraph arcs omit w)
//   t <v>                  (member of the terminal set T)
//   x <role> <v>           (role in s t s1 s2 t1 t2 p)
//   k <value>
//
// Witness:  `w <id>` lines; a bare `w2` line starts the second list. `s` and
// `o` status lines (as printed by the solver) are accepted and ignored.
//
// Witness map:  `g <gadget>` followed by `map <source-id> <target-id> [tag]`
// where ids are typed tokens v<k>, e<k>, a<k>, or `-` for "no counterpart".
namespace cgt {

ProblemInstance parse_instance(std::string_view text);

/// Canonical form: p, q, edges, terminals, roles (canonical role order), k.
/// Comments are not preserved.
std::string serialize_instance(const ProblemInstance& instance);

Witness parse_witness(std::string_view text);
std::string serialize_witness(const Witness& witness);

WitnessMap parse_witness_map(std::string_view text);
std::string serialize_witness_map(const WitnessMap& map);

/// Renders a scaled value exactly: "7", "-3/2".
std::string format_scaled(Weight value, Weight scale);

}  // namespace cgt
