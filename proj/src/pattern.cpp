#include "jumpspec/pattern.hpp"

#include <stdexcept>

namespace jumpspec {

SelectionPattern SelectionPattern::parse(std::string_view text) {
    SelectionPattern p;
    for (char c : text) {
        if (c == ',' || c == ' ') continue;
        if (c == '0')
            p.required_states.push_back(0);
        else if (c == '1')
            p.required_states.push_back(1);
        else
            throw std::invalid_argument("selection pattern must contain only 0/1 (got '" +
                                        std::string(text) + "')");
    }
    p.validate();
    return p;
}

std::string SelectionPattern::to_string() const {
    std::string s;
    s.reserve(required_states.size());
    for (auto v : required_states) s.push_back(v ? '1' : '0');
    return s;
}

void SelectionPattern::validate() const {
    if (required_states.empty())
        throw std::invalid_argument("selection pattern must be non-empty");
    for (auto v : required_states)
        if (v > 1) throw std::invalid_argument("selection pattern entries must be 0 or 1");
}

}  // namespace jumpspec
