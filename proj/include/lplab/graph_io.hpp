#pragma once

#include <string>

#include "lplab/tanner.hpp"

namespace lplab {

/// MacKay alist: "n m", max degrees, per-node degree lists, 1-based adjacency
/// lists (zero-padded entries are ignored on parse). LF line endings.
TannerGraph parse_alist(const std::string& text);
std::string emit_alist(const TannerGraph& g);

/// JSON graph format: {"n": n, "checks": [[0-based var indices], ...]}.
TannerGraph parse_graph_json(const std::string& text);
std::string emit_graph_json(const TannerGraph& g);

}  // namespace lplab
