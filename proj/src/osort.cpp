#include "soram/osort.hpp"

#include <algorithm>

namespace soram {

bool rebuild_order_less(const Record& a, const Record& b) {
  if (a.live() != b.live()) return a.live();
  if (!a.live()) return false;
  if (a.index != b.index) return a.index < b.index;
  return a.epoch > b.epoch;
}

std::vector<std::pair<uint64_t, uint64_t>> oddeven_merge_schedule(uint64_t m) {
  std::vector<std::pair<uint64_t, uint64_t>> sched;
  if (m < 2) return sched;
  uint64_t padded = 1;
  while (padded < m) padded <<= 1;
  for (uint64_t p = 1; p < padded; p <<= 1) {
    for (uint64_t k = p; k >= 1; k >>= 1) {
      for (uint64_t j = k % p; j + k < padded; j += 2 * k) {
        for (uint64_t i = 0; i < k; ++i) {
          uint64_t a = i + j;
          uint64_t b = i + j + k;
          if (a / (2 * p) != b / (2 * p)) continue;
          if (b < m) sched.emplace_back(a, b);
        }
      }
      if (k == 1) break;
    }
  }
  return sched;
}

void oblivious_sort(const CellIo& io, const RegionSpan& span, const RecordLess& less,
                    PrivateWorkspace& ws) {
  uint64_t m = span.size();
  if (m < 2) {
    if (m == 1) span.write(io, 0, span.read(io, 0));  // re-encrypt pass
    return;
  }
  if (ws.fits(m)) {
    auto lease = ws.acquire(m);
    std::vector<Record> buf;
    buf.reserve(m);
    for (uint64_t k = 0; k < m; ++k) buf.push_back(span.read(io, k));
    std::stable_sort(buf.begin(), buf.end(), less);
    for (uint64_t k = 0; k < m; ++k) span.write(io, k, buf[k]);
    return;
  }
  // Cell-by-cell network; both cells are rewritten at every comparator.
  auto lease = ws.acquire(2);
  for (auto [a, b] : oddeven_merge_schedule(m)) {
    Record ra = span.read(io, a);
    Record rb = span.read(io, b);
    if (less(rb, ra)) std::swap(ra, rb);
    span.write(io, a, ra);
    span.write(io, b, rb);
  }
}

void dedup_by_epoch(const CellIo& io, const RegionSpan& span, PrivateWorkspace& ws) {
  uint64_t m = span.size();
  if (m == 0) return;
  auto lease = ws.acquire(2);
  Record survivor = span.read(io, 0);
  span.write(io, 0, survivor);  // uniform re-encrypt pass over every cell
  for (uint64_t k = 1; k < m; ++k) {
    Record cur = span.read(io, k);
    if (cur.live() && survivor.live() && cur.index == survivor.index) {
      cur = Record::empty_marker();
    } else {
      survivor = cur;
    }
    span.write(io, k, cur);
  }
}

uint64_t compact_live(const CellIo& io, const RegionSpan& span, PrivateWorkspace& ws) {
  uint64_t m = span.size();
  if (m == 0) return 0;
  if (ws.fits(m)) {
    auto lease = ws.acquire(m);
    std::vector<Record> buf;
    buf.reserve(m);
    for (uint64_t k = 0; k < m; ++k) buf.push_back(span.read(io, k));
    std::stable_sort(buf.begin(), buf.end(), rebuild_order_less);
    uint64_t live = 0;
    for (const Record& r : buf)
      if (r.live()) ++live;
    for (uint64_t k = 0; k < m; ++k) span.write(io, k, buf[k]);
    return live;
  }
  oblivious_sort(io, span, rebuild_order_less, ws);
  auto lease = ws.acquire(1);
  uint64_t live = 0;
  for (uint64_t k = 0; k < m; ++k)
    if (span.read(io, k).live()) ++live;
  return live;
}

}  // namespace soram
