#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lnd/derivations.hpp"
#include "lnd/rings.hpp"

namespace lnd::cli {

enum class OutputMode { text, structured };

/// Validated global options. Every subcommand runs against a Session, so bad
/// parameters are rejected before any computation starts.
struct Session {
    SurfaceParams surface;
    ThreefoldParams left;
    std::optional<ThreefoldParams> right;
    OutputMode output = OutputMode::text;
    std::uint64_t seed = 0x5eed;
    bool permissive = false;
};

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// `E`, `zero`, or a list such as `u:y^2; v:x^2` (unlisted generators map to 0).
Derivation parse_derivation(const Ring& ring, const std::string& text);

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; `in` feeds `stable-iso verify` when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lnd::cli
