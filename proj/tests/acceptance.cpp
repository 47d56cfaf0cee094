// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line each. Exits nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "homhom/census.hpp"
#include "homhom/classifier.hpp"
#include "homhom/configurations.hpp"
#include "homhom/embedding.hpp"
#include "homhom/homogeneity.hpp"
#include "homhom/localorder.hpp"

using namespace homhom;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("%s  %2d  %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                (long long)ms, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool same_arc_set(const OrientedGraph& g, std::vector<Arc> want) {
    std::sort(want.begin(), want.end());
    return g.arcs() == want;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

int main() {
    SizeCaps wide;
    wide.canonical = 64;
    wide.general = 64;

    criterion(1, "word codec reproduces the figure tournament", [&](std::string& detail) {
        OrientedGraph t = word_to_tournament("0101");
        // figure arcs 2->1, 1->3, 4->1, 3->2, 2->4, 4->3 on positions 1..4
        bool arcs_ok =
            same_arc_set(t, {{1, 0}, {0, 2}, {3, 0}, {2, 1}, {1, 3}, {3, 2}});
        bool iso_ok = is_isomorphic(t, word_to_tournament("1011"));
        if (!arcs_ok) detail = "arc set differs";
        if (!iso_ok) detail += " 0101 !~ 1011";
        return arcs_ok && iso_ok;
    });

    criterion(2, "blow-up reproduces the worked example", [&](std::string& detail) {
        OrientedGraph b = blowup(cycle_c3(), {1, 2, 3});
        bool ok = b.order() == 6 &&
                  same_arc_set(b, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                                   {2, 5}, {3, 0}, {4, 0}, {5, 0}});
        if (!ok) detail = "layout differs from the documented block order";
        return ok;
    });

    criterion(3, "power identity (k*C3)^n ~ (k^n*3^(n-1))*C3", [&](std::string& detail) {
        for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
            long long copies = 1;
            for (int i = 0; i < n; ++i) copies *= k;
            for (int i = 0; i < n - 1; ++i) copies *= 3;
            OrientedGraph lhs = direct_power(k_copies(cycle_c3(), k), n, wide);
            if (!is_isomorphic(lhs, k_copies(cycle_c3(), (int)copies), wide)) {
                detail = "failed at k=" + std::to_string(k) + " n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(4, "hh census up to 6 vertices is {I_n} + {k*C3}", [&](std::string& detail) {
        std::vector<long long> expected = {1, 1, 2, 1, 1, 2};
        for (int n = 1; n <= 6; ++n) {
            std::set<CanonicalForm> expect{canonical_form(OrientedGraph(n))};
            if (n % 3 == 0) expect.insert(canonical_form(k_copies(cycle_c3(), n / 3)));
            std::set<CanonicalForm> got;
            for (const CanonicalForm& cf : enumerate_classes(n))
                if (is_hh(canonical_graph(cf))) got.insert(cf);
            if ((long long)got.size() != expected[n - 1] || got != expect) {
                detail = "mismatch at n=" + std::to_string(n) + " (found " +
                         std::to_string(got.size()) + " hh classes)";
                return false;
            }
        }
        return true;
    });

    criterion(5, "classifier vs brute force over all classes up to 5 vertices",
              [&](std::string& detail) {
                  long long cumulative = 0;
                  for (int n = 1; n <= 5; ++n) cumulative += (long long)enumerate_classes(n).size();
                  if (cumulative != 634) {
                      detail = "cumulative class count " + std::to_string(cumulative) + " != 634";
                      return false;
                  }
                  auto bad = verify_against_bruteforce(5);
                  if (!bad.empty()) {
                      detail = std::to_string(bad.size()) + " discrepancies, first at " +
                               to_string(bad.front().graph);
                      return false;
                  }
                  return true;
              });

    criterion(6, "minimal witnesses of C3 blow-ups satisfy the structure conditions",
              [&](std::string& detail) {
                  int cases = 0;
                  for (int m0 = 1; m0 <= 4; ++m0)
                      for (int m1 = 1; m1 <= 4; ++m1)
                          for (int m2 = 1; m2 <= 4; ++m2) {
                              if (m0 + m1 + m2 > 6 || (m0 == 1 && m1 == 1 && m2 == 1)) continue;
                              ++cases;
                              auto rep = check_minimal_witness(cycle_c3(), {m0, m1, m2}, 3);
                              bool ok = rep.h_bijective && rep.image_tournament &&
                                        rep.domain_all_adjacent && rep.domain_not_tournament &&
                                        rep.bhat.has_value() && rep.bhat_in_age.has_value() &&
                                        !*rep.bhat_in_age;
                              if (!ok) {
                                  detail = "failed for m=(" + std::to_string(m0) + "," +
                                           std::to_string(m1) + "," + std::to_string(m2) + ")";
                                  return false;
                              }
                          }
                  if (cases != 19) {
                      detail = "expected 19 non-bijective multiplicities, saw " +
                               std::to_string(cases);
                      return false;
                  }
                  return true;
              });

    criterion(7, "local-order predicates agree and the codec round-trips",
              [&](std::string& detail) {
                  std::vector<long long> tournament_counts = {1, 1, 2, 4, 12, 56, 456};
                  long long checked = 0;
                  for (int n = 1; n <= 7; ++n) {
                      auto classes = enumerate_tournament_classes(n);
                      if ((long long)classes.size() != tournament_counts[n - 1]) {
                          detail = "tournament count mismatch at n=" + std::to_string(n);
                          return false;
                      }
                      for (const CanonicalForm& cf : classes) {
                          OrientedGraph t = canonical_graph(cf);
                          bool a = is_local_order(t);
                          if (a != is_local_order_by_forbidden(t)) {
                              detail = "predicates disagree at " + to_string(cf);
                              return false;
                          }
                          ++checked;
                          if (n > 6) continue; // round-trip pinned through n=6
                          auto w = tournament_to_word(t);
                          if (w.has_value() != a) {
                              detail = "decoder disagrees with the predicate at " + to_string(cf);
                              return false;
                          }
                          if (w && !is_isomorphic(word_to_tournament(*w), t)) {
                              detail = "round-trip failed at " + to_string(cf);
                              return false;
                          }
                      }
                  }
                  if (checked != 532) {
                      detail = "checked " + std::to_string(checked) + " tournaments, wanted 532";
                      return false;
                  }
                  return true;
              });

    criterion(8, "geometric oracle certifies the word rule (510 words, both signs)",
              [&](std::string& detail) {
                  long long words = 0;
                  for (int n = 1; n <= 8; ++n)
                      for (long long code = 0; code < (1 << n); ++code) {
                          std::string w(n, '0');
                          for (int i = 0; i < n; ++i)
                              if ((code >> (n - 1 - i)) & 1) w[i] = '1';
                          OrientedGraph comb = word_to_tournament(w);
                          if (!(word_to_tournament_geometric(w, Rational(1, 1000)) == comb) ||
                              !(word_to_tournament_geometric(w, Rational(-1, 1000)) == comb)) {
                              detail = "disagreement at word " + w;
                              return false;
                          }
                          ++words;
                      }
                  if (words != 510) {
                      detail = "checked " + std::to_string(words) + " words, wanted 510";
                      return false;
                  }
                  return true;
              });

    criterion(9, "K-refutation of S(5) verifies inside the square", [&](std::string& detail) {
        OrientedGraph s5 = circular_tournament(2);
        auto r = refute_ph_via_K(s5);
        if (!r) {
            detail = "no K found in S(5)";
            return false;
        }
        if (!verify_k_refutation(s5, *r)) {
            detail = "certificate path is not an induced 2-path";
            return false;
        }
        SizeCaps caps = wide;
        if (is_hh(direct_power(s5, 2, caps), caps)) {
            detail = "square of S(5) reported homomorphism homogeneous";
            return false;
        }
        return true;
    });

    criterion(10, "Henson antichain and strong connectivity", [&](std::string& detail) {
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                if (embeds(henson_B(i), henson_B(j))) {
                    detail = "B_" + std::to_string(i) + " embeds into B_" + std::to_string(j);
                    return false;
                }
        for (int n = 1; n <= 6; ++n)
            if (!is_strongly_connected(henson_B(n))) {
                detail = "B_" + std::to_string(n) + " is not strongly connected";
                return false;
            }
        return true;
    });

    criterion(11, "census reports are byte-identical across worker counts",
              [&](std::string& detail) {
                  CliConfig cfg;
                  cfg.nmax = 5;
                  cfg.predicates = {"hh", "ph2", "homog", "tournament", "localorder"};
                  cfg.out_path = "acceptance_census_w1.csv";
                  cfg.workers = 1;
                  run_census(cfg);
                  cfg.out_path = "acceptance_census_w8.csv";
                  cfg.workers = 8;
                  run_census(cfg);
                  std::string a = slurp("acceptance_census_w1.csv");
                  std::string b = slurp("acceptance_census_w8.csv");
                  std::remove("acceptance_census_w1.csv");
                  std::remove("acceptance_census_w8.csv");
                  if (a.empty() || a != b) {
                      detail = "reports differ or are empty";
                      return false;
                  }
                  return true;
              });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
