#pragma once

#include <functional>

#include "soram/cellio.hpp"
#include "soram/workspace.hpp"

namespace soram {

using RecordLess = std::function<bool(const Record&, const Record&)>;

// Rebuild pipeline order: live records first, then index ascending, then
// epoch descending (freshest copy leads its duplicate run).
bool rebuild_order_less(const Record& a, const Record& b);

// Sorts the span by the given order. The sequence of (region, offset, op)
// events depends only on the span geometry and the workspace capacity, never
// on cell contents: either a read-all/sort-privately/write-all pass, or an
// odd-even merge network executed cell by cell when the span does not fit.
void oblivious_sort(const CellIo& io, const RegionSpan& span, const RecordLess& less,
                    PrivateWorkspace& ws);

// Pre: span sorted with duplicates adjacent, freshest (max epoch) first.
// Keeps the leading copy of each index; later copies become empty markers.
void dedup_by_epoch(const CellIo& io, const RegionSpan& span, PrivateWorkspace& ws);

// Moves live records to a prefix (ordered by index) and empty markers to the
// tail; returns the live count.
uint64_t compact_live(const CellIo& io, const RegionSpan& span, PrivateWorkspace& ws);

// Fixed compare-exchange schedule of Batcher's odd-even merge sort for m
// cells; depends only on m.
std::vector<std::pair<uint64_t, uint64_t>> oddeven_merge_schedule(uint64_t m);

}  // namespace soram
