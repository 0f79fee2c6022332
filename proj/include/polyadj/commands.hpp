#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "polyadj/core.hpp"
#include "polyadj/hull.hpp"

namespace polyadj::cli {

using Payload = nlohmann::ordered_json;

enum class Status { Ok = 0, PropertyFailed = 1, InputError = 2 };

const char* status_name(Status s);

struct CommandResult {
    Status status = Status::Ok;
    Payload payload;

    int exit_code() const { return static_cast<int>(status); }
};

struct Options {
    std::size_t max_dim = kDefaultDimensionCap;
};

enum class ReduceKind { StablePart, PartNPadj, NPadjDcp, Chain };
ReduceKind parse_reduce_kind(const std::string& name);

CommandResult cmd_enumerate(Family family, const std::filesystem::path& input, bool count_only, const Options& opts);
CommandResult cmd_adjacent(Family family, const std::filesystem::path& input, const std::string& u, const std::string& v,
                           const Options& opts);
CommandResult cmd_matsui(const std::filesystem::path& input, const Options& opts);
/// `output`, when set, receives the final target code in its text format.
CommandResult cmd_reduce(ReduceKind kind, const std::filesystem::path& input, bool verify, const Options& opts,
                         const std::optional<std::filesystem::path>& output = std::nullopt);
CommandResult cmd_refute_face(const std::filesystem::path& graph, const std::filesystem::path& pairs);
CommandResult cmd_face_check(Family family, const std::filesystem::path& input, const std::filesystem::path& subset,
                             const Options& opts);

/// Indented "key: value" document; lists as "- item".
std::string render_text(const Payload& payload);
std::string render_json(const Payload& payload);

}  // namespace polyadj::cli
