#include "arakelov/fiber_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

using Json = nlohmann::ordered_json;

void reject_unknown_keys(const Json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!known.count(key))
            throw InvalidFiber("unknown key \"" + key + "\" in " + where);
}

long long require_int(const Json& obj, const std::string& key,
                      const std::string& where) {
    if (!obj.contains(key))
        throw InvalidFiber("missing key \"" + key + "\" in " + where);
    if (!obj[key].is_number_integer())
        throw InvalidFiber("key \"" + key + "\" in " + where +
                           " must be an integer");
    return obj[key].get<long long>();
}

std::string require_string(const Json& obj, const std::string& key,
                           const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw InvalidFiber("key \"" + key + "\" in " + where +
                           " must be a string");
    return obj[key].get<std::string>();
}

}  // namespace

SpecialFiber fiber_from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidFiber(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidFiber("fiber file must be an object");
    reject_unknown_keys(
        doc, {"prime_norm", "residue_char", "components", "crossings",
              "sections"},
        "fiber");

    const long long prime_norm = require_int(doc, "prime_norm", "fiber");
    const long long residue_char = require_int(doc, "residue_char", "fiber");

    if (!doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].empty())
        throw InvalidFiber("\"components\" must be a nonempty array");

    std::vector<ComponentRecord> comps;
    for (const auto& c : doc["components"]) {
        if (!c.is_object())
            throw InvalidFiber("component entries must be objects");
        reject_unknown_keys(c, {"name", "multiplicity", "genus",
                                "local_degree"},
                            "component");
        ComponentRecord rec;
        rec.name = require_string(c, "name", "component");
        rec.multiplicity = require_int(c, "multiplicity", rec.name);
        rec.genus = require_int(c, "genus", rec.name);
        if (c.contains("local_degree") && !c["local_degree"].is_null()) {
            if (!c["local_degree"].is_string())
                throw InvalidFiber("local_degree of " + rec.name +
                                   " must be a \"num/den\" string or null");
            rec.local_degree =
                Rational::from_string(c["local_degree"].get<std::string>());
        }
        comps.push_back(std::move(rec));
    }

    SpecialFiber fiber(prime_norm, residue_char, std::move(comps));

    if (doc.contains("crossings")) {
        if (!doc["crossings"].is_array())
            throw InvalidFiber("\"crossings\" must be an array");
        for (const auto& cr : doc["crossings"]) {
            if (!cr.is_array() || cr.size() != 3 || !cr[0].is_string() ||
                !cr[1].is_string() || !cr[2].is_number_integer())
                throw InvalidFiber(
                    "crossing entries must be [nameA, nameB, count]");
            const std::size_t i =
                fiber.component_index(cr[0].get<std::string>());
            const std::size_t j =
                fiber.component_index(cr[1].get<std::string>());
            if (i == j)
                throw InvalidFiber(
                    "self-crossings are derived and may not be specified");
            const long long count = cr[2].get<long long>();
            if (count < 0) throw InvalidFiber("negative crossing count");
            fiber.set_crossing(i, j, count);
        }
    }

    if (doc.contains("sections")) {
        if (!doc["sections"].is_array())
            throw InvalidFiber("\"sections\" must be an array");
        for (const auto& sec : doc["sections"]) {
            if (!sec.is_object())
                throw InvalidFiber("section entries must be objects");
            reject_unknown_keys(sec, {"name", "width", "hits"}, "section");
            SectionHit hit;
            hit.name = require_string(sec, "name", "section");
            hit.width = require_int(sec, "width", hit.name);
            if (!sec.contains("hits") || !sec["hits"].is_object())
                throw InvalidFiber("section " + hit.name +
                                   " needs a \"hits\" object");
            for (const auto& [cname, count] : sec["hits"].items()) {
                if (!count.is_number_integer() || count.get<long long>() < 0)
                    throw InvalidFiber("hit counts must be nonnegative "
                                       "integers");
                if (count.get<long long>() == 0) continue;
                hit.hits[fiber.component_index(cname)] =
                    count.get<long long>();
            }
            fiber.add_section(std::move(hit));
        }
    }
    return fiber;
}

std::string fiber_to_json_text(const SpecialFiber& f) {
    Json doc;
    doc["prime_norm"] = f.prime_norm();
    doc["residue_char"] = f.residue_char();
    doc["components"] = Json::array();
    for (const auto& c : f.components()) {
        Json jc;
        jc["name"] = c.name;
        jc["multiplicity"] = c.multiplicity;
        jc["genus"] = c.genus;
        jc["local_degree"] =
            c.local_degree ? Json(c.local_degree->str()) : Json(nullptr);
        doc["components"].push_back(std::move(jc));
    }
    doc["crossings"] = Json::array();
    for (const auto& [key, count] : f.crossings())
        doc["crossings"].push_back(Json::array(
            {f.components()[key.first].name, f.components()[key.second].name,
             count}));
    doc["sections"] = Json::array();
    for (const auto& s : f.sections()) {
        Json js;
        js["name"] = s.name;
        js["width"] = s.width;
        js["hits"] = Json::object();
        for (const auto& [idx, count] : s.hits)
            js["hits"][f.components()[idx].name] = count;
        doc["sections"].push_back(std::move(js));
    }
    return doc.dump(2) + "\n";
}

SpecialFiber load_fiber(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open fiber file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fiber_from_json_text(buffer.str());
}

void save_fiber(const SpecialFiber& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write fiber file: " + path);
    out << fiber_to_json_text(f);
}

}  // namespace arakelov
