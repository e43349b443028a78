#ifndef EDGEMTA_INSTANCE_IO_HPP
#define EDGEMTA_INSTANCE_IO_HPP

#include "edgemta/domain.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace edgemta {

// Instance documents are JSON objects:
//
//   { "lambda": 0.1, "delta": 0.01,
//     "servers": [ {"alpha":..,"theta":..,"f":..,"mu":..,"B":..,"H":..,"G":..}, ... ],
//     "tasks":   [ {"p":..,"D":..,"tau_e":..,"origin":..}, ... ] }
//
// Syntax errors raise ParseError with the line number, missing or mistyped
// fields raise ParseError naming the field path, and invariant violations
// raise ValidationError.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

// Deterministic output: fixed key order, shortest round-trip numbers.
std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::filesystem::path& path);

} // namespace edgemta

#endif // EDGEMTA_INSTANCE_IO_HPP
