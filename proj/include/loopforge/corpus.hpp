#pragma once

#include <string>
#include <vector>

#include "loopforge/loop.hpp"
#include "loopforge/varieties.hpp"

namespace loopforge {

// One loop of the reference corpus with the classification fragment it is
// expected to satisfy. The fragments cover every inhabited region of the
// variety diagram: boolean groups, non-boolean groups, Moufang non-extra,
// Steiner non-group, RIF flexible C (non-Moufang, non-Steiner), RIF non-C,
// flexible C non-RIF, and ARIF neither C nor RIF.
struct CorpusEntry {
  enum class Provenance { EmbeddedTable, Constructed, FinderOutput };

  std::string name;
  std::string description;
  CayleyLoop loop;
  Provenance provenance = Provenance::Constructed;
  std::vector<std::pair<std::string, bool>> expected;
  bool steiner_labels = false;  // words subcommand uses point labels
};

// Builds the full corpus. The two embedded tables are loaded from
// `<data_dir>/table1.tbl` and `<data_dir>/table2.tbl` and guarded by
// checksums plus spot assertions, so a transcription error fails loudly.
std::vector<CorpusEntry> corpus(const std::string& data_dir);

const CorpusEntry& corpus_entry(const std::vector<CorpusEntry>& entries,
                                const std::string& name);

// Compares a classification against the entry's expected fragment;
// returns human-readable diff lines, empty when consistent.
std::vector<std::string> verify_expected(const CorpusEntry& entry,
                                         const PropertyReport& report);

std::string default_data_dir();  // $LOOPFORGE_DATA or "data"

}  // namespace loopforge
