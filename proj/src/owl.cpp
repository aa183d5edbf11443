#include "revaf/owl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace revaf {

namespace {

std::string sanitize(const std::string& name, bool lowercase) {
    std::string out;
    out.reserve(name.size());
    for (unsigned char c : name) {
        if (std::isalnum(c) || c == '_' || c == '-')
            out += lowercase ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
        else
            out += '_';
    }
    if (out.empty()) out = "_";
    return out;
}

// Deterministic collision-free local names: first comer keeps the plain
// form, later clashes get _2, _3, ...
class NameTable {
public:
    std::string claim(const std::string& wanted) {
        auto [it, fresh] = used_.emplace(wanted, 1);
        if (fresh) return wanted;
        std::string name;
        do {
            name = wanted + "_" + std::to_string(++it->second);
        } while (used_.count(name) != 0);
        used_.emplace(name, 1);
        return name;
    }

private:
    std::map<std::string, int> used_;
};

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

void gate(const ReviewFramework& rf) {
    ValidationReport report = validate(rf);
    if (!report.is_valid()) throw ValidationGateError(std::move(report));
}

// Attack adjacency keyed by canonical id, pair order preserved, duplicate
// pairs collapsed.
struct Adjacency {
    std::map<std::string, std::vector<std::string>> targets;
    std::map<std::string, std::vector<std::string>> attackers;
};

Adjacency adjacency_of(const ReviewFramework& rf) {
    Adjacency adj;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [attacker, target] : rf.attack_pairs) {
        std::pair<std::string, std::string> pair{attacker.str(), target.str()};
        if (!seen.insert(pair).second) continue;
        adj.targets[pair.first].push_back(pair.second);
        adj.attackers[pair.second].push_back(pair.first);
    }
    return adj;
}

} // namespace

const ClassificationResult::PartyClasses* ClassificationResult::find(
    const std::string& party) const {
    for (const auto& p : parties)
        if (p.party == party) return &p;
    return nullptr;
}

std::vector<ReviewArgumentId> ClassificationResult::admissible_union() const {
    std::vector<ReviewArgumentId> out;
    for (const auto& p : parties) out.insert(out.end(), p.admissible.begin(), p.admissible.end());
    std::sort(out.begin(), out.end());
    return out;
}

OwlDocument emit_owl(const ReviewFramework& rf, const std::string& base) {
    gate(rf);

    // Class names keep the party's case; individuals are lowercased with
    // dots flattened to underscores.
    NameTable class_names;
    std::map<std::string, std::string> party_class;
    for (const auto& party : rf.parties)
        party_class.emplace(party.name, class_names.claim(sanitize(party.name, false)));

    OwlDocument doc;
    NameTable individual_names;
    std::map<std::string, std::string> local; // canonical id -> local name
    for (const auto& party : rf.parties) {
        for (const auto& arg : party.arguments) {
            std::string name = individual_names.claim(sanitize(arg.id.str(), true));
            local.emplace(arg.id.str(), name);
            doc.iri_map.emplace_back(arg.id, name);
        }
    }

    Adjacency adj = adjacency_of(rf);
    auto iri = [&](const std::string& name) { return "<" + base + "#" + name + ">"; };

    std::string out;
    out += "Prefix: owl: <http://www.w3.org/2002/07/owl#>\n";
    out += "Prefix: rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n";
    out += "Prefix: rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n";
    out += "Prefix: xsd: <http://www.w3.org/2001/XMLSchema#>\n";
    out += "\n";
    out += "Ontology: <" + base + ">\n";

    for (const char* prop : {"text", "round", "number", "id"}) {
        out += "\n";
        out += "AnnotationProperty: " + iri(prop) + "\n";
    }

    for (const auto& [prop, inverse] :
         std::initializer_list<std::pair<const char*, const char*>>{
             {"attacks", "isAttackedBy"}, {"isAttackedBy", "attacks"}}) {
        out += "\n";
        out += "ObjectProperty: " + iri(prop) + "\n";
        out += "\n";
        out += "  InverseOf:\n";
        out += "    " + iri(inverse) + "\n";
    }

    for (const auto& party : rf.parties) {
        out += "\n";
        out += "Class: " + iri(party_class.at(party.name)) + "\n";
        out += "\n";
        out += "  SubClassOf:\n";
        out += "    owl:Thing\n";
    }

    for (const auto& party : rf.parties) {
        std::string cls = party_class.at(party.name);
        std::string others;
        std::size_t other_count = 0;
        for (const auto& p : rf.parties) {
            if (p.name == party.name) continue;
            if (other_count++) others += " or ";
            others += iri(party_class.at(p.name));
        }
        std::string attacks_range = other_count == 0 ? "owl:Nothing"
                                    : other_count == 1 ? others
                                                       : "(" + others + ")";

        out += "\n";
        out += "Class: " + iri(cls + "ConflictFree") + "\n";
        out += "\n";
        out += "  EquivalentTo:\n";
        out += "    " + iri(cls) + "\n";
        out += "    and (" + iri("attacks") + " only " + attacks_range + ")\n";

        out += "\n";
        out += "Class: " + iri(cls + "Admissible") + "\n";
        out += "\n";
        out += "  EquivalentTo:\n";
        out += "    " + iri(cls + "ConflictFree") + "\n";
        out += "    and (" + iri("isAttackedBy") + " only (" + iri("isAttackedBy") + " some " +
               iri(cls + "ConflictFree") + "))\n";
    }

    auto closure = [&](const char* prop, const std::vector<std::string>* ids) {
        std::string expr = iri(prop) + " only ";
        if (!ids || ids->empty()) return expr + "owl:Nothing";
        expr += "({";
        for (std::size_t i = 0; i < ids->size(); ++i) {
            if (i) expr += ", ";
            expr += iri(local.at((*ids)[i]));
        }
        expr += "})";
        return expr;
    };

    for (const auto& party : rf.parties) {
        for (const auto& arg : party.arguments) {
            std::string key = arg.id.str();
            auto targets_it = adj.targets.find(key);
            auto attackers_it = adj.attackers.find(key);
            const auto* targets = targets_it == adj.targets.end() ? nullptr : &targets_it->second;
            const auto* attackers =
                attackers_it == adj.attackers.end() ? nullptr : &attackers_it->second;

            out += "\n";
            out += "Individual: " + iri(local.at(key)) + "\n";
            out += "\n";
            out += "  Annotations:\n";
            out += "    " + iri("number") + " \"" + std::to_string(arg.id.number) +
                   "\"^^xsd:string,\n";
            out += "    " + iri("round") + " \"" + std::to_string(arg.id.round) +
                   "\"^^xsd:string,\n";
            out += "    " + iri("text") + " \"" + escape_literal(arg.text) + "\"^^xsd:string,\n";
            out += "    " + iri("id") + " \"" + escape_literal(key) + "\"^^xsd:string\n";
            out += "\n";
            out += "  Types:\n";
            out += "    " + iri(party_class.at(party.name)) + ",\n";
            out += "    " + closure("attacks", targets) + ",\n";
            out += "    " + closure("isAttackedBy", attackers) + "\n";

            if (targets || attackers) {
                out += "\n";
                out += "  Facts:\n";
                std::vector<std::string> facts;
                if (targets)
                    for (const auto& t : *targets)
                        facts.push_back(iri("attacks") + " " + iri(local.at(t)));
                if (attackers)
                    for (const auto& a : *attackers)
                        facts.push_back(iri("isAttackedBy") + " " + iri(local.at(a)));
                for (std::size_t i = 0; i < facts.size(); ++i)
                    out += "    " + facts[i] + (i + 1 < facts.size() ? ",\n" : "\n");
            }
        }
    }

    doc.text = std::move(out);
    return doc;
}

ClassificationResult classify_parties(const ReviewFramework& rf) {
    gate(rf);
    Adjacency adj = adjacency_of(rf);

    std::map<std::string, std::string> party_of;
    for (const auto& party : rf.parties)
        for (const auto& arg : party.arguments) party_of.emplace(arg.id.str(), party.name);

    // Conflict-free pass: no attack target inside the argument's own party.
    std::set<std::string> conflict_free;
    for (const auto& party : rf.parties) {
        for (const auto& arg : party.arguments) {
            std::string key = arg.id.str();
            bool cf = true;
            auto it = adj.targets.find(key);
            if (it != adj.targets.end())
                for (const auto& t : it->second)
                    if (party_of.at(t) == party.name) { cf = false; break; }
            if (cf) conflict_free.insert(key);
        }
    }

    // attacked_by_cf[P] = everything some conflict-free member of P attacks.
    std::map<std::string, std::set<std::string>> attacked_by_cf;
    for (const auto& party : rf.parties) {
        auto& hit = attacked_by_cf[party.name];
        for (const auto& arg : party.arguments) {
            std::string key = arg.id.str();
            if (conflict_free.count(key) == 0) continue;
            auto it = adj.targets.find(key);
            if (it != adj.targets.end()) hit.insert(it->second.begin(), it->second.end());
        }
    }

    ClassificationResult result;
    for (const auto& party : rf.parties) {
        ClassificationResult::PartyClasses pc;
        pc.party = party.name;
        const auto& hit = attacked_by_cf.at(party.name);
        for (const auto& arg : party.arguments) {
            std::string key = arg.id.str();
            if (conflict_free.count(key) == 0) continue;
            pc.conflict_free.push_back(arg.id);
            bool adm = true;
            auto it = adj.attackers.find(key);
            if (it != adj.attackers.end())
                for (const auto& b : it->second)
                    if (hit.count(b) == 0) { adm = false; break; }
            if (adm) pc.admissible.push_back(arg.id);
        }
        result.parties.push_back(std::move(pc));
    }
    return result;
}

DivergenceReport compare_with_grounded(const ReviewFramework& rf) {
    DivergenceReport report;
    report.owl_union = classify_parties(rf).admissible_union();
    report.grounded = resolve(rf).grounded;

    std::set_difference(report.owl_union.begin(), report.owl_union.end(),
                        report.grounded.begin(), report.grounded.end(),
                        std::back_inserter(report.only_owl));
    std::set_difference(report.grounded.begin(), report.grounded.end(),
                        report.owl_union.begin(), report.owl_union.end(),
                        std::back_inserter(report.only_grounded));
    report.diverges = !report.only_owl.empty() || !report.only_grounded.empty();
    return report;
}

} // namespace revaf
