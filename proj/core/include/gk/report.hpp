#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace gk {

enum class Status { pass, fail, error };

std::string to_string(Status s);

/// Outcome of one named check. `claim` states the mathematical statement being
/// verified; `details` lists located failures or per-item observations.
struct Report {
    std::string check;
    std::string claim;
    Status status = Status::pass;
    nlohmann::json box;
    std::vector<nlohmann::json> details;

    bool passed() const { return status == Status::pass; }
    void fail(nlohmann::json detail);
    void note(nlohmann::json detail) { details.push_back(std::move(detail)); }
    /// Precondition failure: the check could not run.
    void error(std::string reason);
    /// Folds another report in (its failures become ours).
    void absorb(const Report& other);

    nlohmann::json to_json() const;
};

} // namespace gk
