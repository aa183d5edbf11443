#include "revaf/review.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace revaf {

using ordered_json = nlohmann::ordered_json;

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

int parse_count_field(const std::string& s, const char* what, std::size_t pos) {
    if (!all_digits(s))
        throw ParseError(std::string("argument id has non-numeric ") + what + " '" + s + "'", 0, pos);
    if (s.size() > 9)
        throw ParseError(std::string("argument id ") + what + " '" + s + "' out of range", 0, pos);
    return std::stoi(s);
}

} // namespace

ReviewArgumentId parse_argument_id(const std::string& s) {
    auto last = s.rfind('.');
    if (last == std::string::npos)
        throw ParseError("argument id '" + s + "' has no round/number fields", 0, 1);
    auto second = s.rfind('.', last == 0 ? 0 : last - 1);
    if (last == 0 || second == std::string::npos)
        throw ParseError("argument id '" + s + "' must have the form party.round.number", 0, 1);

    std::string party = s.substr(0, second);
    std::string round = s.substr(second + 1, last - second - 1);
    std::string number = s.substr(last + 1);

    if (party.empty())
        throw ParseError("argument id '" + s + "' has an empty party name", 0, 1);
    if (party.find('.') != std::string::npos)
        throw ParseError("party name '" + party + "' in id '" + s + "' contains a dot", 0, 1);

    ReviewArgumentId id;
    id.party = std::move(party);
    id.round = parse_count_field(round, "round", second + 2);
    id.number = parse_count_field(number, "number", last + 2);
    return id;
}

std::size_t ReviewFramework::argument_count() const {
    std::size_t n = 0;
    for (const auto& p : parties) n += p.arguments.size();
    return n;
}

const ReviewFramework::Party* ReviewFramework::find_party(const std::string& name) const {
    for (const auto& p : parties)
        if (p.name == name) return &p;
    return nullptr;
}

const ReviewArgument* ReviewFramework::find_argument(const ReviewArgumentId& id) const {
    const Party* p = find_party(id.party);
    if (!p) return nullptr;
    for (const auto& a : p->arguments)
        if (a.id == id) return &a;
    return nullptr;
}

const ReviewFramework::Party& ReviewFramework::authors_party() const {
    const Party* p = find_party(root.party);
    if (!p) throw DomainError("root argument '" + root.str() + "' has no party entry");
    return *p;
}

bool ReviewFramework::operator==(const ReviewFramework& other) const {
    if (root != other.root || attack_pairs != other.attack_pairs ||
        parties.size() != other.parties.size())
        return false;
    for (std::size_t i = 0; i < parties.size(); ++i) {
        if (parties[i].name != other.parties[i].name) return false;
        const auto& a = parties[i].arguments;
        const auto& b = other.parties[i].arguments;
        if (a.size() != b.size()) return false;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j].id != b[j].id || a[j].text != b[j].text) return false;
    }
    return true;
}

ReviewFramework parse_review_json(const std::string& text) {
    // nlohmann's DOM silently keeps the last of two identical keys, which
    // would hide duplicate argument ids inside one party object. The callback
    // tracks keys per open object and rejects repeats.
    std::vector<std::set<std::string>> open_objects;
    auto reject_duplicates = [&](int /*depth*/, ordered_json::parse_event_t event,
                                 ordered_json& parsed) {
        switch (event) {
            case ordered_json::parse_event_t::object_start:
                open_objects.emplace_back();
                break;
            case ordered_json::parse_event_t::object_end:
                open_objects.pop_back();
                break;
            case ordered_json::parse_event_t::key: {
                auto key = parsed.get<std::string>();
                if (!open_objects.back().insert(key).second)
                    throw ParseError("duplicate key \"" + key + "\" in JSON object");
                break;
            }
            default: break;
        }
        return true;
    };

    ordered_json doc;
    try {
        doc = ordered_json::parse(text, reject_duplicates);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }

    if (!doc.is_object()) throw ParseError("top level must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "argument_sets" && key != "attack_pairs")
            throw ParseError("unexpected top-level key \"" + key + "\"");
    }
    if (!doc.contains("argument_sets")) throw ParseError("missing key \"argument_sets\"");
    if (!doc.contains("attack_pairs")) throw ParseError("missing key \"attack_pairs\"");
    const auto& sets = doc["argument_sets"];
    const auto& pairs = doc["attack_pairs"];
    if (!sets.is_object()) throw ParseError("\"argument_sets\" must be an object");
    if (!pairs.is_array()) throw ParseError("\"attack_pairs\" must be an array");

    ReviewFramework rf;
    std::set<std::string> seen_ids;
    std::vector<ReviewArgumentId> round0;
    for (const auto& [party_name, args] : sets.items()) {
        if (!args.is_object())
            throw ParseError("party \"" + party_name + "\" must map ids to texts");
        ReviewFramework::Party party;
        party.name = party_name;
        for (const auto& [id_text, arg_text] : args.items()) {
            if (!arg_text.is_string())
                throw ParseError("text of argument \"" + id_text + "\" must be a string");
            ReviewArgument arg;
            arg.id = parse_argument_id(id_text);
            arg.text = arg_text.get<std::string>();
            if (arg.id.party != party_name)
                throw ParseError("argument \"" + id_text + "\" filed under party \"" +
                                 party_name + "\"");
            if (!seen_ids.insert(id_text).second)
                throw ParseError("duplicate argument id \"" + id_text + "\"");
            if (arg.id.round == 0) round0.push_back(arg.id);
            party.arguments.push_back(std::move(arg));
        }
        rf.parties.push_back(std::move(party));
    }

    for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw ParseError("attack pairs must be two-element arrays of argument ids");
        ReviewArgumentId attacker = parse_argument_id(pair[0].get<std::string>());
        ReviewArgumentId target = parse_argument_id(pair[1].get<std::string>());
        if (seen_ids.count(attacker.str()) == 0)
            throw ParseError("attack references undeclared argument \"" + attacker.str() + "\"");
        if (seen_ids.count(target.str()) == 0)
            throw ParseError("attack references undeclared argument \"" + target.str() + "\"");
        rf.attack_pairs.emplace_back(std::move(attacker), std::move(target));
    }

    if (round0.empty())
        throw ParseError("no root argument: exactly one argument must have round 0");
    if (round0.size() > 1) {
        std::string ids;
        for (const auto& id : round0) {
            if (!ids.empty()) ids += ", ";
            ids += id.str();
        }
        throw ParseError("multiple round-0 arguments: " + ids);
    }
    rf.root = round0.front();
    return rf;
}

std::string serialize_review_json(const ReviewFramework& rf) {
    ordered_json sets = ordered_json::object();
    for (const auto& party : rf.parties) {
        ordered_json args = ordered_json::object();
        for (const auto& arg : party.arguments) args[arg.id.str()] = arg.text;
        sets[party.name] = std::move(args);
    }
    ordered_json pairs = ordered_json::array();
    for (const auto& [attacker, target] : rf.attack_pairs)
        pairs.push_back(ordered_json::array({attacker.str(), target.str()}));

    ordered_json doc = ordered_json::object();
    doc["argument_sets"] = std::move(sets);
    doc["attack_pairs"] = std::move(pairs);
    return doc.dump(2) + "\n";
}

FrameworkMapping to_framework(const ReviewFramework& rf) {
    FrameworkMapping m;
    m.framework.reserve(rf.argument_count(), rf.attack_pairs.size());
    m.ids.reserve(rf.argument_count());
    for (const auto& party : rf.parties) {
        for (const auto& arg : party.arguments) {
            m.framework.add_argument(arg.id.str());
            m.ids.push_back(arg.id);
        }
    }
    for (const auto& [attacker, target] : rf.attack_pairs)
        m.framework.add_attack(attacker.str(), target.str());
    return m;
}

} // namespace revaf
