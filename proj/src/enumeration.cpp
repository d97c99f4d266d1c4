// SPDX-License-Identifier: Apache-2.0
#include "twobridge/enumeration.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "twobridge/serialize.hpp"

namespace twobridge {
namespace {

void check_crossing_bound(Int max_crossing) {
  if (max_crossing < kMinTableCrossing || max_crossing > kMaxTableCrossing) {
    throw DomainError("max crossing must lie in [" + std::to_string(kMinTableCrossing) + ", " +
                      std::to_string(kMaxTableCrossing) + "]");
  }
}

// Continuants of the word built so far: value = top / bottom.
struct Continuant {
  Int top = 1, top_prev = 0, bottom = 0, bottom_prev = 1;
  Continuant push(Int a) const {
    return {top * a + top_prev, top, bottom * a + bottom_prev, bottom};
  }
};

void positive_words(const Continuant& state, Int remaining, Int sum, std::vector<KnotClass>& out) {
  for (Int a = 1; a <= remaining; ++a) {
    const Continuant next = state.push(a);
    // A last entry >= 2 makes this the unique expansion of top/bottom.
    if (a >= 2 && next.top % 2 == 1) {
      const Fraction f = normalize(next.top, next.bottom);
      if (orbit(f).front() == f.q()) {
        out.push_back(KnotClass{f, f.p(), sum + a, is_amphicheiral(f)});
      }
    }
    if (a < remaining) positive_words(next, remaining - a, sum + a, out);
  }
}

struct LoadedCheckpoint {
  std::map<Int, ScanRecord> records;
};

LoadedCheckpoint load_checkpoint(const std::filesystem::path& path) {
  LoadedCheckpoint out;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return out;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read checkpoint " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  // Keep every complete, parseable line; drop a torn tail.
  std::size_t good_end = 0;
  while (good_end < content.size()) {
    const auto nl = content.find('\n', good_end);
    if (nl == std::string::npos) break;
    const std::string line = content.substr(good_end, nl - good_end);
    try {
      ScanRecord r = scan_record_from_json(Json::parse(line));
      out.records[r.p] = std::move(r);
    } catch (const std::exception&) {
      break;
    }
    good_end = nl + 1;
  }
  if (good_end != content.size()) {
    std::filesystem::resize_file(path, good_end, ec);
    if (ec) throw IoError("cannot truncate checkpoint " + path.string() + ": " + ec.message());
  }
  return out;
}

void attach_evidence(ScanRecord& record) {
  record.evidence.clear();
  for (Int q : record.non_family) {
    record.evidence.push_back(cg_condition(record.p, q, false, CountMethod::FloorSum));
  }
}

}  // namespace

std::vector<KnotClass> enumerate_classes(Int max_crossing) {
  check_crossing_bound(max_crossing);
  std::vector<KnotClass> out;
  positive_words(Continuant{}, max_crossing, 0, out);
  std::ranges::sort(out, [](const KnotClass& a, const KnotClass& b) {
    return std::tie(a.crossing, a.canonical) < std::tie(b.crossing, b.canonical);
  });
  return out;
}

std::vector<FamilyClass> family_classes(Int max_crossing, const GeneratorBounds& bounds) {
  std::map<Fraction, FamilyClass> found;
  for_each_family_knot(bounds, [&](const GeneratedKnot& k, FamilyId f) {
    const KnotClass cls = canonical_class(k.fraction);
    if (cls.crossing > max_crossing) return;
    auto [it, inserted] = found.try_emplace(cls.canonical, FamilyClass{cls, {}});
    auto& fams = it->second.families;
    if (std::ranges::find(fams, f) == fams.end()) {
      fams.push_back(f);
      std::ranges::sort(fams);
    }
  });
  std::vector<FamilyClass> out;
  out.reserve(found.size());
  for (auto& [key, value] : found) out.push_back(std::move(value));
  return out;
}

std::vector<TableRow> ribbon_table(Int max_crossing) {
  check_crossing_bound(max_crossing);
  const GeneratorBounds bounds{max_crossing, max_crossing};
  const auto classes = family_classes(max_crossing, bounds);

  const auto wider = family_classes(max_crossing, {max_crossing, max_crossing + 1});
  if (wider.size() != classes.size()) {
    throw InternalError("families 1/2 parameter bound |a|,|b| <= " + std::to_string(max_crossing) +
                        " misses classes within crossing " + std::to_string(max_crossing));
  }

  std::vector<TableRow> rows;
  for (Int c = kMinTableCrossing; c <= max_crossing; ++c) rows.push_back(TableRow{c});

  for (const FamilyClass& fc : classes) {
    const Int p = exact_sqrt(fc.cls.determinant);
    if (p < 0) {
      throw InternalError("family class " + fc.cls.canonical.str() +
                          " has a non-square determinant");
    }
    if (!is_family_member(p, fc.cls.canonical.q(), GeneratorLookup::Skip).member) {
      throw InternalError("generator/lemma disagreement: class " + fc.cls.canonical.str() +
                          " fails every fraction condition");
    }
    if (fc.cls.crossing < kMinTableCrossing) continue;
    TableRow& row = rows[static_cast<std::size_t>(fc.cls.crossing - kMinTableCrossing)];
    const auto has = [&](FamilyId f) { return std::ranges::find(fc.families, f) != fc.families.end(); };
    const bool in0 = has(FamilyId::Family0), in1 = has(FamilyId::Family1), in2 = has(FamilyId::Family2);
    if (in0) ++row.family0;
    if (in1) {
      ++row.family1;
    } else if (in2) {
      ++row.family2;
    }
    if (in0 && (in1 || in2)) ++row.overlap;
    ++row.total;
  }
  return rows;
}

ScanRecord scan_one(Int p, bool audit) {
  if (p < 3 || p % 2 == 0) throw DomainError("scan needs odd p >= 3");
  ScanRecord record;
  record.p = p;
  const Int m = p * p;
  for (Int q = 1; q < m; ++q) {
    if (std::gcd(q, p) != 1) continue;
    if (!audit) {
      const Int inv = mod_inverse(q, m);
      if (std::min({inv, m - q, m - inv}) < q) continue;
    }
    ++record.q_tested;
    if (!cg_condition(p, q, true, CountMethod::FloorSum).passes) continue;
    record.cg_passing.push_back(q);
    if (!is_family_member(p, q, GeneratorLookup::Skip).member) record.non_family.push_back(q);
  }
  attach_evidence(record);
  return record;
}

std::vector<ScanRecord> conjecture_scan(const ScanOptions& options) {
  const Int lo = options.p_min % 2 == 0 ? options.p_min + 1 : options.p_min;
  const Int hi = options.p_max % 2 == 0 ? options.p_max - 1 : options.p_max;
  if (options.p_min < 3 || options.p_min > options.p_max) {
    throw DomainError("scan range must satisfy 3 <= min-p <= max-p");
  }

  std::map<Int, ScanRecord> done;
  if (options.checkpoint) done = load_checkpoint(*options.checkpoint).records;

  std::vector<Int> pending;
  for (Int p = lo; p <= hi; p += 2) {
    if (!done.contains(p)) pending.push_back(p);
  }
  if (options.stop_after && *options.stop_after < pending.size()) pending.resize(*options.stop_after);

  std::ofstream sink;
  if (options.checkpoint && !pending.empty()) {
    sink.open(*options.checkpoint, std::ios::binary | std::ios::app);
    if (!sink) throw IoError("cannot write checkpoint " + options.checkpoint->string());
  }

  // Workers fill slots in any order; this thread writes them in order.
  std::vector<std::optional<ScanRecord>> slots(pending.size());
  std::vector<std::exception_ptr> errors(pending.size());
  std::mutex mu;
  std::condition_variable ready;
  std::size_t next_index = 0;
  bool abort = false;

  auto worker = [&] {
    while (true) {
      std::size_t idx;
      {
        std::lock_guard lock(mu);
        if (abort || next_index >= pending.size()) return;
        idx = next_index++;
      }
      std::optional<ScanRecord> result;
      std::exception_ptr error;
      try {
        result = scan_one(pending[idx], options.audit);
      } catch (...) {
        error = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        slots[idx] = std::move(result);
        errors[idx] = error;
      }
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, options.jobs ? options.jobs : std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < std::min<std::size_t>(jobs, pending.size()); ++i) pool.emplace_back(worker);

  std::exception_ptr failure;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[i].has_value() || errors[i]; });
    if (errors[i]) {
      failure = errors[i];
      abort = true;
      break;
    }
    ScanRecord record = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    if (sink.is_open()) {
      sink << checkpoint_line(record) << '\n';
      sink.flush();
      if (!sink) {
        failure = std::make_exception_ptr(IoError("cannot write checkpoint " + options.checkpoint->string()));
        std::lock_guard relock(mu);
        abort = true;
        break;
      }
    }
    if (options.progress) options.progress(record);
    done[record.p] = std::move(record);
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  std::vector<ScanRecord> out;
  for (auto& [p, record] : done) {
    if (p < lo || p > hi) continue;
    if (record.evidence.size() != record.non_family.size()) attach_evidence(record);
    out.push_back(std::move(record));
  }
  return out;
}

std::vector<CrosscheckRow> amphicheiral_crosscheck(Int max_crossing) {
  if (max_crossing < 4) throw DomainError("crosscheck needs max crossing >= 4");
  check_crossing_bound(max_crossing);
  std::map<Int, Int> amph;
  for (const KnotClass& k : enumerate_classes(max_crossing)) {
    if (k.amphicheiral) ++amph[k.crossing];
  }
  std::map<Int, Int> fam0;
  for (const FamilyClass& fc : family_classes(max_crossing + 2, {max_crossing + 2, 0})) {
    ++fam0[fc.cls.crossing];
  }
  std::vector<CrosscheckRow> out;
  for (Int c = 4; c <= max_crossing; c += 2) {
    CrosscheckRow row{c, amph[c], fam0[c + 2], false};
    row.equal = row.amphicheiral == row.family0_at_plus_two;
    out.push_back(row);
  }
  return out;
}

}  // namespace twobridge
