#pragma once

#include <string>
#include <vector>

#include "ahncut/network.hpp"

namespace ahncut {

// Text format for hierarchical networks ("AHN 1"):
//
//   AHN 1
//   LABELS <K>
//   LEVELS <H>
//   VARS <h> <n>                       one line per level, h = 1..H
//   UNARY <h> <i> <c_0> ... <c_K-1> [<c_free>]   (the free cost only for h >= 2)
//   EDGE <h> <i> <j> <lambda>          same-level pairwise, lambda >= 0
//   LINK <h> <c> <i> <k>               parent c on level h, child i on h-1, k >= 0
//
// '#' starts a comment. Levels are 1-based in files (level 1 is the base
// level). Missing UNARY lines default to all-zero costs; duplicate UNARY lines
// for the same variable are rejected, as are negative strengths/weights and
// out-of-range indices. Numbers are written with 9 significant digits.
HierarchicalNetwork parse_network(const std::string& text);
std::string write_network(const HierarchicalNetwork& net);

HierarchicalNetwork load_network(const std::string& path);
void save_network(const HierarchicalNetwork& net, const std::string& path);

// Labeling files hold one line per level: space-separated label indices, with
// `F` for the free label. A file may carry fewer lines than the network has
// levels (typically just the base line).
std::vector<std::vector<Label>> parse_labeling_rows(const std::string& text);
std::string write_labeling(const Labeling& x);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Shortest round-trippable decimal with 9 significant digits ("%.9g"), with
// negative zero normalized; all file and CLI numbers go through this.
std::string format_number(double v);

}  // namespace ahncut
