#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lnd/rings.hpp"

namespace lnd {

/// A ring homomorphism given by images of generators.
///
/// The domain is a list of source generators; a map may cover only some of
/// them (a restriction to the x,y,z-subring, for instance). Composition
/// follows (f o g)(r) = f(g(r)).
class RingMap {
public:
    RingMap(Ring source, Ring target, std::vector<std::pair<std::string, AElement>> images);

    static RingMap identity(const Ring& ring);

    const Ring& source() const noexcept { return source_; }
    const Ring& target() const noexcept { return target_; }
    const std::vector<std::pair<std::string, AElement>>& images() const noexcept { return images_; }
    const AElement& image(std::string_view generator) const;
    bool covers_all_generators() const;

    /// Substitutes generator images into the canonical representative.
    /// Throws UnknownVariable if `h` involves a generator outside the domain.
    AElement apply(const AElement& h) const;
    /// Same for an arbitrary polynomial over the source variables.
    AElement apply(const Poly& p) const;

    /// Images of the source's defining relations; all zero iff the map is well defined.
    std::vector<std::pair<std::string, AElement>> relation_images() const;
    bool preserves_relations() const;

    friend bool operator==(const RingMap& lhs, const RingMap& rhs);

private:
    Ring source_;
    Ring target_;
    std::vector<std::pair<std::string, AElement>> images_;
};

/// outer o inner
RingMap compose(const RingMap& outer, const RingMap& inner);

}  // namespace lnd
