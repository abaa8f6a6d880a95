#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "soram/osort.hpp"

using namespace soram;

namespace {

struct Fixture {
  Server server;
  std::unique_ptr<CellCipher> cipher = make_transparent_cipher();
  Rng rng{123};
  CellIo io{server, *cipher, rng};
  RegionSpan span;

  explicit Fixture(const std::vector<Record>& records) {
    server.create_region(RegionId::cache(), records.size() ? records.size() : 1);
    span.append(RegionId::cache(), records.size());
    for (size_t k = 0; k < records.size(); ++k)
      io.write(RegionId::cache(), k, records[k]);
    server.drain_trace();
  }

  std::vector<Record> contents() const {
    std::vector<Record> out;
    for (uint64_t k = 0; k < span.size(); ++k) out.push_back(span.read(io, k));
    return out;
  }
};

std::vector<Record> random_records(size_t count, uint64_t seed, uint64_t index_range,
                                   double empty_fraction = 0.2) {
  Rng rng(seed);
  std::uniform_int_distribution<uint64_t> xd(0, index_range - 1);
  std::uniform_real_distribution<double> ed(0, 1);
  std::vector<Record> out;
  for (size_t i = 0; i < count; ++i) {
    if (ed(rng) < empty_fraction) {
      out.push_back(Record::empty_marker());
    } else {
      out.push_back(Record::live_item(xd(rng), rng(), rng() % 1000));
    }
  }
  return out;
}

// The adversary-visible projection of a trace.
std::vector<std::tuple<std::string, uint64_t, char>> projection(Server& s) {
  std::vector<std::tuple<std::string, uint64_t, char>> out;
  for (const TraceEvent& ev : s.drain_trace())
    out.emplace_back(ev.region.to_string(), ev.offset, ev.op == Op::Read ? 'R' : 'W');
  return out;
}

}  // namespace

TEST_CASE("odd-even merge schedule sorts anything (network oracle)") {
  for (uint64_t m : {2, 3, 7, 8, 16, 33, 100}) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      std::mt19937_64 rng(seed);
      std::vector<uint64_t> v(m);
      for (auto& x : v) x = rng() % 50;
      auto expect = v;
      std::sort(expect.begin(), expect.end());
      for (auto [a, b] : oddeven_merge_schedule(m))
        if (v[b] < v[a]) std::swap(v[a], v[b]);
      CHECK(v == expect);
    }
  }
}

TEST_CASE("oblivious_sort matches a plain comparison-sort oracle") {
  for (uint64_t ws_cap : {uint64_t(4000), uint64_t(8)}) {  // private pass vs network
    auto records = random_records(1000, 99, 400);
    Fixture f(records);
    PrivateWorkspace ws(ws_cap);
    oblivious_sort(f.io, f.span, rebuild_order_less, ws);
    auto got = f.contents();
    auto expect = records;
    std::stable_sort(expect.begin(), expect.end(), rebuild_order_less);
    // The network is not stable; compare the sorted key sequences.
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].live() == expect[i].live());
      CHECK(got[i].index == expect[i].index);
      CHECK(got[i].epoch == expect[i].epoch);
    }
    CHECK(ws.in_use() == 0);
  }
}

TEST_CASE("sort trace projection is identical for any input of equal length") {
  for (uint64_t ws_cap : {uint64_t(64), uint64_t(4)}) {
    Fixture sorted_input{[] {
      std::vector<Record> v;
      for (uint64_t i = 0; i < 16; ++i) v.push_back(Record::live_item(i, i, 1));
      return v;
    }()};
    Fixture reversed_input{[] {
      std::vector<Record> v;
      for (uint64_t i = 0; i < 16; ++i) v.push_back(Record::live_item(15 - i, i, 1));
      return v;
    }()};
    PrivateWorkspace ws_a(ws_cap), ws_b(ws_cap);
    oblivious_sort(sorted_input.io, sorted_input.span, rebuild_order_less, ws_a);
    oblivious_sort(reversed_input.io, reversed_input.span, rebuild_order_less, ws_b);
    CHECK(projection(sorted_input.server) == projection(reversed_input.server));
  }
}

TEST_CASE("dedup keeps the max-epoch copy and empties the rest") {
  std::vector<Record> v = {Record::live_item(5, 70, 7), Record::live_item(5, 30, 3)};
  Fixture f(v);
  PrivateWorkspace ws(64);
  dedup_by_epoch(f.io, f.span, ws);
  auto got = f.contents();
  CHECK(got[0].live());
  CHECK(got[0].epoch == 7);
  CHECK_FALSE(got[1].live());
}

TEST_CASE("dedup leaves all-distinct input unchanged") {
  std::vector<Record> v;
  for (uint64_t i = 0; i < 9; ++i) v.push_back(Record::live_item(i, i, 1));
  Fixture f(v);
  PrivateWorkspace ws(64);
  dedup_by_epoch(f.io, f.span, ws);
  CHECK(f.contents() == v);
}

TEST_CASE("sort + dedup matches a hash-map keep-max-epoch oracle") {
  auto records = random_records(600, 4242, 80, 0.1);
  Fixture f(records);
  PrivateWorkspace ws(4000);
  oblivious_sort(f.io, f.span, rebuild_order_less, ws);
  dedup_by_epoch(f.io, f.span, ws);

  std::map<uint64_t, Record> oracle;
  for (const Record& r : records) {
    if (!r.live()) continue;
    auto it = oracle.find(r.index);
    if (it == oracle.end() || r.epoch > it->second.epoch) oracle[r.index] = r;
  }
  std::map<uint64_t, Record> got;
  for (const Record& r : f.contents()) {
    if (!r.live()) continue;
    CHECK(got.count(r.index) == 0);  // no duplicate survives
    got[r.index] = r;
  }
  REQUIRE(got.size() == oracle.size());
  for (auto& [x, r] : oracle) {
    REQUIRE(got.count(x) == 1);
    CHECK(got[x].epoch == r.epoch);
    CHECK(got[x].value == r.value);
  }
}

TEST_CASE("compact_live: live prefix ordered by index, correct count") {
  SUBCASE("all empty") {
    Fixture f(std::vector<Record>(8, Record::empty_marker()));
    PrivateWorkspace ws(64);
    CHECK(compact_live(f.io, f.span, ws) == 0);
  }
  SUBCASE("all live") {
    std::vector<Record> v;
    for (uint64_t i = 0; i < 8; ++i) v.push_back(Record::live_item(i, i, 1));
    Fixture f(v);
    PrivateWorkspace ws(64);
    CHECK(compact_live(f.io, f.span, ws) == 8);
    CHECK(f.contents() == v);
  }
  SUBCASE("mixed random equals the filter oracle") {
    for (uint64_t ws_cap : {uint64_t(4000), uint64_t(8)}) {
      auto records = random_records(300, 7, 100000, 0.4);
      Fixture f(records);
      PrivateWorkspace ws(ws_cap);
      uint64_t live = compact_live(f.io, f.span, ws);
      std::vector<Record> expect;
      for (const Record& r : records)
        if (r.live()) expect.push_back(r);
      std::stable_sort(expect.begin(), expect.end(), rebuild_order_less);
      CHECK(live == expect.size());
      auto got = f.contents();
      for (size_t i = 0; i < expect.size(); ++i) CHECK(got[i] == expect[i]);
      for (size_t i = expect.size(); i < got.size(); ++i) CHECK_FALSE(got[i].live());
    }
  }
}

TEST_CASE("sort-dedup-compact is idempotent") {
  auto records = random_records(200, 11, 40);
  Fixture f(records);
  PrivateWorkspace ws(4000);
  auto pipeline = [&] {
    oblivious_sort(f.io, f.span, rebuild_order_less, ws);
    dedup_by_epoch(f.io, f.span, ws);
    compact_live(f.io, f.span, ws);
  };
  pipeline();
  auto once = f.contents();
  pipeline();
  CHECK(f.contents() == once);
}

TEST_CASE("workspace budget is enforced") {
  PrivateWorkspace ws(10);
  CHECK(ws.fits(10));
  CHECK_FALSE(ws.fits(11));
  {
    auto lease = ws.acquire(8);
    CHECK(ws.in_use() == 8);
    CHECK_THROWS_AS(ws.acquire(3), UsageError);
  }
  CHECK(ws.in_use() == 0);
  CHECK(PrivateWorkspace::for_ram_size(1024, 0.5).capacity() == 32);
}
