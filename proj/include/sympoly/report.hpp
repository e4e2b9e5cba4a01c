#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace sympoly {

using Json = nlohmann::ordered_json;

struct Failure {
    Json inputs = Json::object();
    std::string expected;
    std::string actual;
};

/// Outcome of one verification suite. Status is derived from the failure
/// list, so "pass iff no failures" holds by construction.
class VerificationReport {
public:
    explicit VerificationReport(std::string claim) : claim_(std::move(claim)) {}

    const std::string& claim() const { return claim_; }
    std::size_t total() const { return total_; }
    const std::vector<Failure>& failures() const { return failures_; }
    bool passed() const { return failures_.empty(); }
    const char* status() const { return passed() ? "pass" : "fail"; }

    Json& params() { return params_; }
    const Json& params() const { return params_; }

    /// Counts one checked instance; keeps a witness when it failed.
    void record(bool ok, Json inputs, const std::string& expected, const std::string& actual);
    void record_failure(Failure f);

    /// Folds another report's instances and failures into this one.
    void absorb(const VerificationReport& other);

    Json to_json() const;
    /// One line: "conjecture1: pass (6/6)".
    std::string summary() const;

private:
    std::string claim_;
    Json params_ = Json::object();
    std::size_t total_ = 0;
    std::vector<Failure> failures_;
};

}  // namespace sympoly
