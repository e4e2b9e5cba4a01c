#include "sympoly/report.hpp"

namespace sympoly {

void VerificationReport::record(bool ok, Json inputs, const std::string& expected, const std::string& actual) {
    ++total_;
    if (!ok) failures_.push_back(Failure{std::move(inputs), expected, actual});
}

void VerificationReport::record_failure(Failure f) {
    ++total_;
    failures_.push_back(std::move(f));
}

void VerificationReport::absorb(const VerificationReport& other) {
    total_ += other.total_;
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

Json VerificationReport::to_json() const {
    Json out = Json::object();
    out["claim"] = claim_;
    out["params"] = params_;
    out["total"] = total_;
    Json failures = Json::array();
    for (const auto& f : failures_)
        failures.push_back(Json{{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    out["failures"] = std::move(failures);
    out["status"] = status();
    return out;
}

std::string VerificationReport::summary() const {
    return claim_ + ": " + status() + " (" + std::to_string(total_ - failures_.size()) + "/" +
           std::to_string(total_) + ")";
}

}  // namespace sympoly
