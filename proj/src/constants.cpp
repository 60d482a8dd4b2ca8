#include "exciton/constants.hpp"

#include <cmath>

#include "exciton/warnings.hpp"

namespace exciton {

double magic_angle()
{
    return std::acos(1.0 / std::sqrt(3.0));
}

std::vector<std::string> Warnings::names() const
{
    static constexpr std::pair<Warning, const char*> table[] = {
        {Warning::long_chain, "long_chain"},
        {Warning::dark_mode, "dark_mode"},
        {Warning::near_field, "near_field"},
        {Warning::before_arrival, "before_arrival"},
        {Warning::coupling_invalid, "coupling_invalid"},
        {Warning::resonant_neighbors, "resonant_neighbors"},
    };
    std::vector<std::string> out;
    for (const auto& [flag, name] : table) {
        if (has(flag)) out.emplace_back(name);
    }
    return out;
}

}  // namespace exciton
