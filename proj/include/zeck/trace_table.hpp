#pragma once

#include <string>

#include "zeck/gzd.hpp"

namespace zeck {

/// Plain-text version of the worked-example tables: an index header, then
/// for each step a state row (legality indices and digits, infinity places
/// shown as "inf") followed by an action row holding the digit changes. The
/// last state row is the gzd. Needs a snapshot for every step.
std::string render_trace_table(const Representation& initial, const TracedRun& run);

}  // namespace zeck
