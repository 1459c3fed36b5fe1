#pragma once

#include "compasp/parser.hpp"
#include "compasp/program.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace testing {

inline compasp::Interpretation lits(compasp::Program& p, std::string_view text) {
    return compasp::parse_interpretation(text, p);
}

inline std::vector<std::string> render_all(const compasp::Program& p,
                                           const std::vector<compasp::Interpretation>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) {
        out.push_back(compasp::render_interpretation(p, x));
    }
    return out;
}

}  // namespace testing
