#include "gk/report.hpp"

namespace gk {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::error:
        return "error";
    }
    return "error";
}

void Report::fail(nlohmann::json detail)
{
    if (status == Status::pass)
        status = Status::fail;
    details.push_back(std::move(detail));
}

void Report::error(std::string reason)
{
    status = Status::error;
    details.push_back({{"precondition", std::move(reason)}});
}

void Report::absorb(const Report& other)
{
    if (other.status == Status::error)
        status = Status::error;
    else if (other.status == Status::fail && status == Status::pass)
        status = Status::fail;
    for (const auto& d : other.details)
        details.push_back({{"from", other.check}, {"detail", d}});
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["check"] = check;
    j["claim"] = claim;
    j["status"] = to_string(status);
    j["box"] = box;
    j["details"] = details;
    return j;
}

} // namespace gk
