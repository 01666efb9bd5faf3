#include "lnd/ring_map.hpp"

#include <algorithm>
#include <optional>

#include "lnd/error.hpp"

namespace lnd {

RingMap::RingMap(Ring source, Ring target, std::vector<std::pair<std::string, AElement>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    for (std::size_t k = 0; k < images_.size(); ++k) {
        source_.generator_index(images_[k].first);
        if (!(images_[k].second.ring() == target_))
            throw ParamsMismatch("image of " + images_[k].first + " is not in the target ring");
        for (std::size_t j = 0; j < k; ++j)
            if (images_[j].first == images_[k].first)
                throw InvalidParameters("generator " + images_[k].first + " has two images");
    }
}

RingMap RingMap::identity(const Ring& ring) {
    std::vector<std::pair<std::string, AElement>> images;
    for (const auto& name : ring.variables()) images.emplace_back(name, ring.generator(name));
    return RingMap(ring, ring, std::move(images));
}

const AElement& RingMap::image(std::string_view generator) const {
    for (const auto& [name, img] : images_)
        if (name == generator) return img;
    throw UnknownVariable(std::string(generator));
}

bool RingMap::covers_all_generators() const {
    return images_.size() == source_.variables().size();
}

AElement RingMap::apply(const AElement& h) const {
    if (!(h.ring() == source_)) throw ParamsMismatch("element is not in the source ring of the map");
    return apply(h.value());
}

AElement RingMap::apply(const Poly& p) const {
    const auto& svars = source_.variables();
    Poly q = p.with_variables(svars);

    // image slot per source variable, and lazily built powers of each image
    std::vector<std::optional<std::size_t>> slot(svars.size());
    for (std::size_t k = 0; k < svars.size(); ++k)
        for (std::size_t j = 0; j < images_.size(); ++j)
            if (images_[j].first == svars[k]) slot[k] = j;
    std::vector<std::vector<AElement>> powers(svars.size());

    auto power = [&](std::size_t var, Exponent e) -> const AElement& {
        auto& list = powers[var];
        if (list.empty()) {
            list.push_back(target_.constant(1));
            list.push_back(images_[*slot[var]].second);
        }
        while (list.size() <= e) list.push_back(list.back() * list[1]);
        return list[e];
    };

    PolyBuilder sum(target_.variables());
    const Exponents zero_shift(target_.variables().size(), 0);
    for (const auto& t : q.terms()) {
        std::optional<AElement> acc;
        for (std::size_t k = 0; k < svars.size(); ++k) {
            Exponent e = t.exponents[k];
            if (e == 0) continue;
            if (!slot[k]) throw UnknownVariable(svars[k]);
            const AElement& pk = power(k, e);
            acc = acc ? *acc * pk : pk;
        }
        if (acc)
            sum.add_scaled(acc->value(), t.coefficient, zero_shift);
        else
            sum.add(zero_shift, t.coefficient);
    }
    // a sum of normal forms is already normal; normal_form here only wraps it
    return normal_form(sum.finish(), target_);
}

std::vector<std::pair<std::string, AElement>> RingMap::relation_images() const {
    return {
        {"x^a + y^b + z^c + lambda", apply(source_.surface_relation())},
        {"x^m*u - y^n*v - 1", apply(source_.unit_relation())},
    };
}

bool RingMap::preserves_relations() const {
    auto rel = relation_images();
    return std::all_of(rel.begin(), rel.end(), [](const auto& r) { return r.second.is_zero(); });
}

bool operator==(const RingMap& lhs, const RingMap& rhs) {
    if (!(lhs.source_ == rhs.source_) || !(lhs.target_ == rhs.target_)) return false;
    if (lhs.images_.size() != rhs.images_.size()) return false;
    for (const auto& [name, img] : lhs.images_) {
        auto it = std::find_if(rhs.images_.begin(), rhs.images_.end(), [&](const auto& p) { return p.first == name; });
        if (it == rhs.images_.end() || !(it->second == img)) return false;
    }
    return true;
}

RingMap compose(const RingMap& outer, const RingMap& inner) {
    if (!(inner.target() == outer.source()))
        throw ParamsMismatch("cannot compose maps: inner target differs from outer source");
    std::vector<std::pair<std::string, AElement>> images;
    for (const auto& [name, img] : inner.images()) images.emplace_back(name, outer.apply(img));
    return RingMap(inner.source(), outer.target(), std::move(images));
}

}  // namespace lnd
