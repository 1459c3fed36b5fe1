#pragma once

// Blocks-world planning encoding and its instances.

#include "compasp/program.hpp"
#include "compasp/schematic.hpp"
#include "compasp/tightness.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compasp {

class InstanceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// on(block, object): object is a block name or "table".
using OnFact = std::pair<std::string, std::string>;

struct BlocksInstance {
    std::string name = "blocks";
    std::vector<std::string> blocks;
    std::int64_t horizon = 0;
    std::vector<OnFact> initial;
    std::vector<OnFact> goal;
};

/// Throws InstanceError when the initial state is not a set of towers
/// standing on the table, or names are malformed.
void validate(const BlocksInstance& i);

/// Reads the declarative instance format:
///
///     blocks: a b c
///     horizon: 2
///     init: on(a,b) on(b,table) on(c,table)
///     goal: on(a,b) on(b,c)
///
/// `%` starts a comment. Throws InstanceError.
[[nodiscard]] BlocksInstance parse_blocks_instance(std::string_view text);

/// The fixed schematic rules of the encoding, without instance facts.
[[nodiscard]] const std::string& blocks_world_rules();

/// Encoding rules plus time/1, block/1 and initial-state facts and the goal
/// rule "goal(T) :- time(T), on(...,T), ...".
[[nodiscard]] SchematicProgram generate_blocks_world(const BlocksInstance& i);

/// moveop(block, destination) actions per time step.
struct Plan {
    std::map<std::int64_t, std::set<OnFact>> steps;

    [[nodiscard]] bool empty() const { return steps.empty(); }
    [[nodiscard]] std::size_t num_actions() const;
    friend bool operator==(const Plan&, const Plan&) = default;
};

[[nodiscard]] Plan extract_plan(const Program& p, const Interpretation& x);
[[nodiscard]] std::string render_plan(const Plan& plan);

/// The level mapping that witnesses tightness of the encoding on any model
/// of its completion. Levels are affine in the time argument T, with
/// `t_max` the largest time constant. Throws std::invalid_argument for
/// atoms outside the encoding's vocabulary.
[[nodiscard]] LevelMapping blocks_world_level_mapping(const Program& p, const Interpretation& x, std::int64_t t_max);

}  // namespace compasp
