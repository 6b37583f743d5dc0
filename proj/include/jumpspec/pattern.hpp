#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jumpspec {

/// Ordered list of required measured qubit states defining a post-selection
/// scenario. The last entry is the anchor: lags are measured from the strobe
/// at which the final state of the pattern was observed.
///
/// Compact text form: "0" selects ground-state strobes, "10" selects strobes
/// immediately after a downward jump, "1110" after three consecutive excited
/// readouts followed by ground.
struct SelectionPattern {
    std::vector<std::uint8_t> required_states;

    SelectionPattern() = default;
    SelectionPattern(std::initializer_list<std::uint8_t> states)
        : required_states(states) {}

    std::size_t size() const { return required_states.size(); }

    // Accepts "10" or "1,0"; throws std::invalid_argument otherwise.
    static SelectionPattern parse(std::string_view text);
    std::string to_string() const;

    void validate() const;  // non-empty, entries in {0,1}

    friend auto operator<=>(const SelectionPattern&, const SelectionPattern&) = default;
};

inline SelectionPattern ground_pattern() { return SelectionPattern{0}; }
inline SelectionPattern post_jump_pattern() { return SelectionPattern{1, 0}; }

}  // namespace jumpspec
