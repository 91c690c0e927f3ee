#pragma once

#include "gjets/corpus.hpp"
#include "gjets/limits.hpp"

#include <string>
#include <vector>

namespace gjets {

enum class SuiteStatus { Pass, Fail, Skipped };

// One verification cell. Failures always carry a witness payload from
// which the failure re-checks independently.
struct VerificationReport {
    std::string suite;
    std::string instance;
    int s = -1;          // jet order; -1 when the suite ignores it
    std::string detail;  // e.g. the vertex cover under test
    SuiteStatus status = SuiteStatus::Pass;
    std::string witness; // nonempty iff status == Fail, or a skip note
};

// Suite ids:
//   cor135       edge ideal equals the intersection of its cover primes
//   vc-colon     <jets of W> = jets edge ideal saturated at the order-0
//                complement product, for every minimal cover W
//   minimal-prime  <jets of W> occurs among the minimal primes of the
//                radical of the jets edge ideal
//   pc-identity  closed-form principal component = cover intersection
//   pc-saturation  saturation route agrees with the closed form up to
//                radical, both directions
//   cochordal-pc   principal components of cochordal graphs stay cochordal
//   froberg      linear resolution of the edge ideal iff cochordal
//   ghw-cover    jets of a minimal cover minimally cover the jets graph
const std::vector<std::string>& suite_names();

// Runs every (instance, s) cell of the suite; cells are independent and
// evaluated in parallel, reports returned in deterministic order.
// Resource overruns downgrade a cell to Skipped, never to Pass.
std::vector<VerificationReport> run_suite(const std::string& suite, const Corpus& corpus,
                                          const std::vector<int>& s_values,
                                          const Limits& limits = {});

// 0 when every cell passed, 1 on any failure, 3 when skips occurred
// without failures.
int reports_exit_code(const std::vector<VerificationReport>& reports);

std::string report_line(const VerificationReport& report);

} // namespace gjets
