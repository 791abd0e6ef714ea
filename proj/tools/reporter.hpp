#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace modlie::cli {

enum class Command { Verify, Cohomology, Rigidity, Integrability };
enum class Model { Chevalley, Exterior };

/// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDiscrepancy = 2;

inline constexpr int kDefaultMaxRank = 10;

struct RunConfig {
    Command command = Command::Verify;
    int l = 0;
    /// Unset means the command default: exterior for rigidity, chevalley otherwise.
    std::optional<Model> model;
    std::string out_path;
    std::size_t jobs = 1;
    int verbosity = 0;
    bool allow_large = false;
};

std::string to_string(Command c);
std::string to_string(Model m);

/// Usage problems with the config, or nullopt. Does not check the l cap.
std::optional<std::string> usage_error(const RunConfig& config);

/// Model actually used once defaults are applied.
Model effective_model(const RunConfig& config);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cohomology(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_rigidity(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_integrability(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Validates, warns about the l cap, and dispatches.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace modlie::cli
