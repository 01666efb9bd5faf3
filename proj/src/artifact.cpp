#include "lnd/artifact.hpp"

#include <json.hpp>

#include "lnd/error.hpp"
#include "lnd/parse.hpp"

namespace lnd {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormat = "lnd-algebra/stable-iso/1";

const std::map<std::string, std::string> kPrime = {{"u", "u'"}, {"v", "v'"}, {"w", "w'"}};
const std::map<std::string, std::string> kUnprime = {{"u'", "u"}, {"v'", "v"}, {"w'", "w"}};

const std::vector<std::string> kPrimedVariables = {"x", "y", "z", "u'", "v'", "w'"};

json map_images(const RingMap& map, bool primed_keys, bool primed_values) {
    json out = json::object();
    for (const auto& [name, img] : map.images())
        out[primed_keys ? primed(name) : name] = primed_values ? primed_string(img) : img.to_string();
    return out;
}

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
    return doc.at(key);
}

std::string text_field(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string", 0);
    return v.get<std::string>();
}

AElement parse_left(const Ring& ring, const std::string& text) {
    return ring.parse(text);
}

AElement parse_right(const Ring& ring, const std::string& text) {
    return ring.element(parse_expression(text, kPrimedVariables).renamed(kUnprime));
}

RingMap read_map(const json& doc, const char* key, const Ring& source, const Ring& target, bool source_primed) {
    const json& images = field(doc, key);
    std::vector<std::pair<std::string, AElement>> out;
    for (const auto& name : source.variables()) {
        std::string k = source_primed ? primed(name) : name;
        std::string text = text_field(images, k.c_str());
        out.emplace_back(name, source_primed ? parse_left(target, text) : parse_right(target, text));
    }
    return RingMap(source, target, std::move(out));
}

}  // namespace

std::string primed(const std::string& generator) {
    auto it = kPrime.find(generator);
    return it == kPrime.end() ? generator : it->second;
}

std::string primed_string(const AElement& e) {
    return e.value().renamed(kPrime).to_string();
}

std::string stable_iso_to_json(const StableIso& iso, int indent) {
    json doc;
    doc["format"] = kFormat;
    doc["surface"] = iso.surface.to_string();
    doc["left"] = iso.left.to_string();
    doc["right"] = iso.right.to_string();
    doc["forward"] = map_images(iso.forward, false, true);
    doc["backward"] = map_images(iso.backward, true, false);
    doc["certificates"] = {{"A", iso.left_certificate.first.to_string()},
                           {"B", iso.left_certificate.second.to_string()},
                           {"A'", primed_string(iso.right_certificate.first)},
                           {"B'", primed_string(iso.right_certificate.second)}};
    long fwd = 0, bwd = 0;
    for (const auto& [name, img] : iso.forward.images()) fwd = std::max(fwd, img.value().total_degree());
    for (const auto& [name, img] : iso.backward.images()) bwd = std::max(bwd, img.value().total_degree());
    doc["degrees"] = {{"forward_max", fwd}, {"backward_max", bwd}};
    return doc.dump(indent);
}

StableIso stable_iso_from_json(std::string_view text) {
    json doc = json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded()) throw ParseError("artifact is not valid JSON", 0);
    if (text_field(doc, "format") != kFormat) throw ParseError("unsupported artifact format", 0);

    SurfaceParams surface = parse_surface(text_field(doc, "surface"));
    // permissive: an artifact may carry n or m = 1 if it was built that way
    ThreefoldParams left = parse_threefold(surface, text_field(doc, "left"), true);
    ThreefoldParams right = parse_threefold(surface, text_field(doc, "right"), true);
    Ring lring = bundle_ring(left);
    Ring rring = bundle_ring(right);

    const json& certs = field(doc, "certificates");
    return StableIso{surface,
                     left,
                     right,
                     read_map(doc, "forward", lring, rring, false),
                     read_map(doc, "backward", rring, lring, true),
                     {parse_left(lring, text_field(certs, "A")), parse_left(lring, text_field(certs, "B"))},
                     {parse_right(rring, text_field(certs, "A'")), parse_right(rring, text_field(certs, "B'"))}};
}

}  // namespace lnd
