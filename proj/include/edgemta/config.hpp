#ifndef EDGEMTA_CONFIG_HPP
#define EDGEMTA_CONFIG_HPP

#include "edgemta/generator.hpp"
#include "edgemta/qlearning.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace edgemta {

// Learner settings plus generator parameters, as read from a flat
// `key = value` file. Blank lines and `#` comments are ignored.
//
//   learner:   episodes alpha gamma epsilon seed screen(nonnegative|deadline)
//   generator: profile(baseline|compact) servers tasks lambda delta theta cpu_alpha
//              {price,data,deadline,freq,power,gain,bandwidth,capacity}_{min,max}
//
// `profile` resets the generator ranges, so it should come first.
struct HarnessConfig {
    GeneratorParams generator;
    learning::LearnConfig learn;
    bool seed_set = false;  // true when the file named a seed explicitly
};

// Unknown keys and unparsable values throw ParseError with the line number.
HarnessConfig parse_config(std::string_view text, HarnessConfig base = {});
HarnessConfig load_config(const std::filesystem::path& path, HarnessConfig base = {});

// Value of EDGE_MTA_SEED when set. Throws ParseError if it is not an
// unsigned integer.
std::optional<std::uint64_t> seed_from_env();

} // namespace edgemta

#endif // EDGEMTA_CONFIG_HPP
