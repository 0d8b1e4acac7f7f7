// Construction, caching and fingerprinting of the generic straightening table.
#pragma once

#include "uqf4/pbw.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace uqf4 {

// The six pairs whose vanishing brackets are the quantum Serre relations.
const std::vector<std::pair<int, int>>& serre_pairs();

enum class RuleSource { disconnected, minimal_pair, serre, empty_window, solved };

// True when no PBW monomial of degree beta_i + beta_j uses only indices strictly between i and j.
bool window_is_empty(int i, int j);

struct RuleRecord {
    int i = 0;
    int j = 0;
    RuleSource source = RuleSource::disconnected;
    int unknowns = 0;   // products solved for together (same degree)
    int equations = 0;  // linear relations available to determine them
    bool associativity = false;  // splits alone were not enough
};

struct BuildReport {
    std::vector<RuleRecord> records;  // in construction order
    double seconds = 0;
};

// Builds all 276 rules over Q(r,s).  Throws TableError on any consistency failure.
std::shared_ptr<GenericTable> build_straightening_table(BuildReport* report = nullptr);

// Order in which rules are constructed: by combined height, then gap, then i.
std::vector<std::pair<int, int>> construction_order();

constexpr int kTableFormatVersion = 1;

std::string serialize_table(const GenericTable& t);
GenericTable parse_table(const std::string& text);
void store_table(const GenericTable& t, const std::string& path);
GenericTable load_table(const std::string& path);

// Hex digest of the serialized form.
std::string table_fingerprint(const GenericTable& t);

// Loads from path when present and valid, otherwise builds (and stores when a path is given).
// Sets *note to a warning when a cache was rejected.
std::shared_ptr<GenericTable> obtain_table(const std::string& cache_path, std::string* note = nullptr);

// Specialized and r<->s swapped images of a generic table.
std::shared_ptr<StraighteningTable<CycloNum>> specialize_table(const GenericTable& t, const EvalPoint& at);
std::shared_ptr<GenericTable> swap_table(const GenericTable& t);

}  // namespace uqf4
