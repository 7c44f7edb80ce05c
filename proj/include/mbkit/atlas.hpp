#pragma once

#include <iosfwd>
#include <string>

#include "mbkit/search.hpp"

namespace mbk {

struct AtlasOptions {
    int k_min = 1;
    int k_max = 16;
    SearchConfig search;
    bool timings = false;  // off by default so rerun output is byte-identical
    std::string out_dir;
};

// Processes a graph6 catalog (one graph per line): bounds, recognizers and
// searches per graph, JSON-lines entries in input order plus certificate
// files under <out_dir>/certs. Graphs already present in the output are not
// recomputed, so interrupted runs resume and finished runs are idempotent.
// Returns 0, or 1 when malformed catalog lines were skipped.
int run_atlas(const std::string& catalog_path, const AtlasOptions& opts, std::ostream& log);

}  // namespace mbk
