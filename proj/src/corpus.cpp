#include "loopforge/corpus.hpp"

#include <cstdint>
#include <cstdlib>

#include "loopforge/steiner.hpp"

namespace loopforge {

namespace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

CayleyLoop load_guarded(const std::string& path, std::uint64_t checksum) {
  CayleyLoop L = load_loop_file(path);
  if (fnv1a(serialize_loop(L)) != checksum)
    throw LoopError("embedded table was altered: " + path);
  return L;
}

void spot_check(const CayleyLoop& L, Elem a, Elem b, Elem want,
                const std::string& which) {
  if (L.mul(a, b) != want)
    throw LoopError("spot assertion failed in " + which + ": " +
                    std::to_string(a) + "*" + std::to_string(b) +
                    " != " + std::to_string(want));
}

}  // namespace

std::vector<CorpusEntry> corpus(const std::string& data_dir) {
  std::vector<CorpusEntry> out;
  using P = CorpusEntry::Provenance;
  auto add = [&](std::string name, std::string desc, CayleyLoop loop,
                 P prov, std::vector<std::pair<std::string, bool>> expected,
                 bool labels = false) {
    out.push_back(CorpusEntry{std::move(name), std::move(desc),
                              std::move(loop), prov, std::move(expected),
                              labels});
  };

  add("z1", "trivial group", cyclic_group(1), P::Constructed,
      {{"associative", true}, {"boolean_group", true}, {"steiner", true}});
  add("z2", "cyclic group of order 2", cyclic_group(2), P::Constructed,
      {{"associative", true}, {"boolean_group", true}, {"steiner", true}});
  add("z3", "cyclic group of order 3", cyclic_group(3), P::Constructed,
      {{"associative", true},
       {"boolean_group", false},
       {"steiner", false},
       {"extra", true},
       {"rif", true}});
  add("z4", "cyclic group of order 4", cyclic_group(4), P::Constructed,
      {{"associative", true}, {"boolean_group", false}, {"steiner", false}});
  add("z5", "cyclic group of order 5", cyclic_group(5), P::Constructed,
      {{"associative", true}, {"moufang", true}});
  add("z6", "cyclic group of order 6", cyclic_group(6), P::Constructed,
      {{"associative", true}, {"boolean_group", false}});
  add("z2xz2", "boolean group of order 4", boolean_group(2), P::Constructed,
      {{"boolean_group", true}, {"extra", true}, {"steiner", true}});
  add("z2cubed", "boolean group of order 8", boolean_group(3), P::Constructed,
      {{"boolean_group", true}, {"steiner", true}});
  add("s3", "symmetric group on three letters", symmetric_group_s3(),
      P::Constructed,
      {{"associative", true},
       {"commutative", false},
       {"rif", true},
       {"arif", true},
       {"diassociative", true}});
  add("chein_s3",
      "nonassociative Moufang loop of order 12 (Moufang but not extra)",
      chein_double(symmetric_group_s3()), P::Constructed,
      {{"moufang", true},
       {"associative", false},
       {"c_loop", false},
       {"extra", false},
       {"rif", true},
       {"arif", true},
       {"steiner", false},
       {"diassociative", true}});

  CayleyLoop table1 =
      load_guarded(data_dir + "/table1.tbl", 0x86afd6811e2a3cffull);
  spot_check(table1, 3, 12, 18, "table1");
  spot_check(table1, 15, 18, 10, "table1");
  add("table1", "flexible C-loop of order 24 that is not RIF",
      std::move(table1), P::EmbeddedTable,
      {{"ip", true},
       {"flexible", true},
       {"c_loop", true},
       {"arif", true},
       {"rif", false},
       {"moufang", false},
       {"diassociative", true},
       {"power_alternative", true},
       {"steiner", false}});

  CayleyLoop table2 =
      load_guarded(data_dir + "/table2.tbl", 0x1f55dc2ce03a8c28ull);
  spot_check(table2, 3, 3, 0, "table2");
  spot_check(table2, 3, 6, 10, "table2");
  add("table2", "C-loop of order 12 that is not flexible", std::move(table2),
      P::EmbeddedTable,
      {{"c_loop", true},
       {"flexible", false},
       {"alternative", true},
       {"ip", true},
       {"arif", false},
       {"rif", false},
       {"moufang", false},
       {"diassociative", false}});

  add("steiner10", "Steiner loop of order 10 (nonassociative, non-group)",
      steiner_loop(sts9_system()), P::Constructed,
      {{"steiner", true},
       {"associative", false},
       {"boolean_group", false},
       {"moufang", false},
       {"rif", true},
       {"arif", true},
       {"c_loop", true},
       {"commutative", true},
       {"diassociative", true}},
      true);
  add("steiner14", "Steiner loop of order 14 from the cyclic triple system",
      steiner_loop(z13_system()), P::Constructed,
      {{"steiner", true},
       {"associative", false},
       {"boolean_group", false},
       {"moufang", false},
       {"rif", true},
       {"arif", true},
       {"c_loop", true},
       {"commutative", true},
       {"diassociative", true}},
      true);

  add("steiner10_x_z3",
      "RIF flexible C-loop that is neither Moufang nor Steiner",
      direct_product(steiner_loop(sts9_system()), cyclic_group(3)),
      P::Constructed,
      {{"rif", true},
       {"flexible", true},
       {"c_loop", true},
       {"arif", true},
       {"moufang", false},
       {"steiner", false}});
  add("steiner10_x_chein_s3", "RIF loop that is not a C-loop",
      direct_product(steiner_loop(sts9_system()),
                     chein_double(symmetric_group_s3())),
      P::Constructed,
      {{"rif", true},
       {"arif", true},
       {"c_loop", false},
       {"moufang", false},
       {"steiner", false}});
  add("table1_x_chein_s3", "ARIF loop that is neither a C-loop nor RIF",
      direct_product(load_guarded(data_dir + "/table1.tbl",
                                  0x86afd6811e2a3cffull),
                     chein_double(symmetric_group_s3())),
      P::Constructed,
      {{"arif", true},
       {"c_loop", false},
       {"rif", false},
       {"moufang", false},
       {"steiner", false},
       {"diassociative", true}});

  return out;
}

const CorpusEntry& corpus_entry(const std::vector<CorpusEntry>& entries,
                                const std::string& name) {
  for (const CorpusEntry& e : entries)
    if (e.name == name) return e;
  throw LoopError("no corpus entry named " + name);
}

std::vector<std::string> verify_expected(const CorpusEntry& entry,
                                         const PropertyReport& report) {
  std::vector<std::string> diffs;
  for (const auto& [prop, want] : entry.expected) {
    bool got = report.value(prop);
    if (got != want)
      diffs.push_back(entry.name + ": " + prop + " expected " +
                      (want ? "true" : "false") + " but classified " +
                      (got ? "true" : "false"));
  }
  return diffs;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("LOOPFORGE_DATA")) return env;
  return "data";
}

}  // namespace loopforge
