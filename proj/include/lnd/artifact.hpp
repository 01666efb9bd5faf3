#pragma once

#include <string>
#include <string_view>

#include "lnd/cancellation.hpp"

namespace lnd {

/// JSON document holding the twelve generator images and both Bezout
/// certificates of a stable isomorphism. Right-hand generators are written
/// u', v', w'.
///
///     {"format": "lnd-algebra/stable-iso/1", "surface": "2,3,7,0",
///      "left": "2,2", "right": "2,3",
///      "forward": {"x": ..., "w": ...}, "backward": {"x": ..., "w'": ...},
///      "certificates": {"A": ..., "B": ..., "A'": ..., "B'": ...},
///      "degrees": {"forward_max": 5, "backward_max": 4}}
std::string stable_iso_to_json(const StableIso& iso, int indent = -1);

/// Inverse of stable_iso_to_json. Only parses; call verify_stable_iso to
/// check the result. Throws ParseError on malformed documents and
/// InvalidParameters on bad parameters.
StableIso stable_iso_from_json(std::string_view text);

/// "x", "y", "z", "u'", "v'", "w'" for the right-hand ring.
std::string primed(const std::string& generator);
std::string primed_string(const AElement& e);

}  // namespace lnd
