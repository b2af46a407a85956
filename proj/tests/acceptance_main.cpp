// Acceptance gate: one line per core behavior. Each behavior aggregates its
// property suite over dimensions 1 through 4 with fixed seeds, 100 cases per
// dimension, so a pass here means the invariant held on 400 random cases.

#include "tenskit/checks.hpp"
#include "tenskit/error.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

int main()
{
    struct Criterion {
        const char* text;
        const char* suite;
    };
    const std::vector<Criterion> criteria = {
        {"bilateral products agree with composed maps under the two-sided identification", "lambdaB"},
        {"matched composition acts as function composition on coordinates", "funccomp"},
        {"composition is associative for maps and for bilateral tensors", "assoc"},
        {"metric raising and lowering round-trip and metric inverses multiply to the identity", "metric"},
        {"change of basis is functorial, commutes with the algebra, and fixes scalars", "basis"},
        {"array transposition reverses products, inverses cancel, and fixed products check out", "array"},
        {"free-algebra expansion is associative, unital, bilinear, noncommutative, and coefficient-faithful", "freealg"},
        {"expression parser enforces the index discipline, round-trips, and matches the engine", "parser"},
        {"multi-vector application equals application to the joint coordinate array", "lambdaM"},
    };

    bool allPass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int failures = 0;
        int total = 0;
        std::string error;
        for (int dim = 1; dim <= 4 && error.empty(); ++dim) {
            try {
                const tenskit::SuiteResult r = tenskit::run_suite(
                    criteria[i].suite, dim, 1000 * static_cast<std::uint64_t>(i + 1) + dim, 100);
                failures += r.failures;
                total += r.cases;
            } catch (const tenskit::Error& e) {
                error = e.what();
            }
        }
        if (!error.empty()) {
            std::cout << "FAIL " << criteria[i].text << " [error: " << error << "]\n";
            allPass = false;
        } else if (failures == 0) {
            std::cout << "PASS " << criteria[i].text << " [" << total << " cases]\n";
        } else {
            std::cout << "FAIL " << criteria[i].text << " [" << failures << "/" << total
                      << " cases failing]\n";
            allPass = false;
        }
    }
    return allPass ? 0 : 1;
}
