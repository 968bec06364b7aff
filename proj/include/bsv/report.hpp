#ifndef BSV_REPORT_HPP
#define BSV_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bsv {

// Structured pass/fail record for one verified claim.  A report passes
// exactly when its failure list is empty; notes are informational only.
struct VerificationReport {
    struct Failure {
        std::string check;    // which sub-check failed, e.g. "part4"
        std::string witness;  // offending object, human readable
    };

    std::string subject;
    std::int64_t checks = 0;  // individual assertions evaluated
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    std::map<std::string, std::int64_t> counters;

    bool passed() const { return failures.empty(); }
    void fail(std::string check, std::string witness) {
        failures.push_back({std::move(check), std::move(witness)});
    }
    void require(bool ok, const std::string& check, const std::string& witness) {
        checks++;
        if (!ok) fail(check, witness);
    }
};

}  // namespace bsv

#endif
