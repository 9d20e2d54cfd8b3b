#pragma once

namespace signpat {

// Instrumentation shared by the two pattern generators. A branch is one
// completed root-to-leaf path of the depth-first construction.
struct GenStats {
  long long branches = 0;
  long long emitted = 0;
  long long dead_ends = 0;      // empty choice set or ambiguous forced value
  long long filtered_out = 0;   // leaves rejected by a post-filter
  bool cells_assigned_once = true;  // every cell assigned exactly once per branch
};

}  // namespace signpat
