#ifndef HOMHOM_CENSUS_HPP
#define HOMHOM_CENSUS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homhom/canonical.hpp"
#include "homhom/digraph.hpp"

namespace homhom {

// One representative per isomorphism class of oriented graphs on n vertices,
// in canonical-form order. Generation is by canonical augmentation: children
// of the (n-1)-level representatives, deduplicated by canonical form.
std::vector<CanonicalForm> enumerate_classes(int n, const SizeCaps& caps = default_caps(),
                                             int workers = 1);

void enumerate_oriented_graphs(int n, const SizeCaps& caps,
                               const std::function<void(const OrientedGraph&)>& sink);

std::vector<OrientedGraph> enumerate_oriented_graphs(int n,
                                                     const SizeCaps& caps = default_caps());

// Oracle path: all 3^(n(n-1)/2) arc-state assignments, deduplicated (n <= 5).
std::vector<CanonicalForm> enumerate_classes_naive(int n);

// Tournaments only (complete extension patterns), same augmentation scheme.
std::vector<CanonicalForm> enumerate_tournament_classes(int n,
                                                        const SizeCaps& caps = default_caps());

extern const char* const kCensusPredicates[5]; // hh, ph2, homog, tournament, localorder

struct CliConfig {
    int nmax = 5;
    std::vector<std::string> predicates = {"hh", "ph2", "homog", "tournament", "localorder"};
    std::string out_path;          // empty: don't persist
    std::string format = "csv";    // csv | json
    int workers = 1;
    SizeCaps caps;
};

struct CensusRow {
    int n = 0;
    long long total = 0;
    std::vector<long long> counts; // aligned with report predicates
};

struct CensusReport {
    std::string version;
    SizeCaps caps;
    std::vector<std::string> predicates;
    std::vector<CensusRow> rows;
    // canonical strings of the graphs satisfying is_hh, per vertex count
    std::map<int, std::vector<std::string>> hh_forms;
};

// Deterministic in content regardless of worker count; persists atomically
// when cfg.out_path is set.
CensusReport run_census(const CliConfig& cfg);

std::string render_csv(const CensusReport& r);
std::string render_json(const CensusReport& r);

} // namespace homhom

#endif
