#include "revaf/iccma.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

#include "revaf/validate.hpp"

namespace revaf {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::size_t parse_index(const std::string& tok, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a non-negative integer, got '" + tok + "'", line_no);
    return value;
}

} // namespace

IccmaFramework parse_iccma(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    IccmaFramework result;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "p") {
            if (have_header) throw ParseError("duplicate 'p af' header", line_no);
            if (tokens.size() != 3 || tokens[1] != "af")
                throw ParseError("header must be 'p af <n>'", line_no);
            n = parse_index(tokens[2], line_no);
            have_header = true;
            result.framework.reserve(n, 0);
            result.index_map.reserve(n);
            for (std::size_t i = 1; i <= n; ++i) {
                std::string key = std::to_string(i);
                result.framework.add_argument(key);
                result.index_map.push_back(std::move(key));
            }
            continue;
        }

        if (!have_header) throw ParseError("attack line before 'p af' header", line_no);
        if (tokens.size() != 2)
            throw ParseError("attack line must be '<attacker> <target>'", line_no);
        std::size_t a = parse_index(tokens[0], line_no);
        std::size_t b = parse_index(tokens[1], line_no);
        if (a < 1 || a > n)
            throw ParseError("attacker index " + tokens[0] + " out of range 1.." +
                                 std::to_string(n),
                             line_no);
        if (b < 1 || b > n)
            throw ParseError("target index " + tokens[1] + " out of range 1.." + std::to_string(n),
                             line_no);
        result.framework.add_attack(a - 1, b - 1);
    }

    if (!have_header) throw ParseError("missing 'p af <n>' header");
    return result;
}

std::string emit_iccma(const Framework& f) {
    std::string out = "p af " + std::to_string(f.size()) + "\n";
    for (const auto& [attacker, target] : f.attacks())
        out += std::to_string(attacker + 1) + " " + std::to_string(target + 1) + "\n";
    return out;
}

IccmaExport review_to_iccma(const ReviewFramework& rf) {
    ValidationReport report = validate(rf);
    if (!report.is_valid()) throw ValidationGateError(std::move(report));

    FrameworkMapping m = to_framework(rf);
    IccmaExport out;
    out.text = emit_iccma(m.framework);

    nlohmann::ordered_json sidecar = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < m.framework.size(); ++i)
        sidecar[std::to_string(i + 1)] = m.framework.key_of(i);
    out.sidecar = sidecar.dump(2) + "\n";
    return out;
}

ReviewFramework review_from_iccma(const std::string& text, const std::string& sidecar) {
    IccmaFramework doc = parse_iccma(text);

    nlohmann::ordered_json map;
    try {
        map = nlohmann::ordered_json::parse(sidecar);
    } catch (const nlohmann::ordered_json::parse_error& e) {
        throw ParseError(std::string("malformed sidecar JSON: ") + e.what());
    }
    if (!map.is_object()) throw ParseError("sidecar must be a JSON object of index -> id");

    std::vector<ReviewArgumentId> id_of(doc.framework.size());
    std::vector<char> seen(doc.framework.size(), 0);
    for (const auto& [index_text, id_value] : map.items()) {
        std::size_t index = parse_index(index_text, 0);
        if (index < 1 || index > doc.framework.size())
            throw ParseError("sidecar index " + index_text + " out of range 1.." +
                             std::to_string(doc.framework.size()));
        if (!id_value.is_string())
            throw ParseError("sidecar entry " + index_text + " must be a string id");
        id_of[index - 1] = parse_argument_id(id_value.get<std::string>());
        seen[index - 1] = 1;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw ParseError("sidecar is missing an id for index " + std::to_string(i + 1));

    // Parties in first-appearance order; the framework's insertion order was
    // party-major, so this reproduces the original grouping.
    ReviewFramework rf;
    std::vector<ReviewArgumentId> round0;
    for (const auto& id : id_of) {
        ReviewFramework::Party* party = nullptr;
        for (auto& p : rf.parties)
            if (p.name == id.party) { party = &p; break; }
        if (!party) {
            rf.parties.push_back({id.party, {}});
            party = &rf.parties.back();
        }
        for (const auto& existing : party->arguments)
            if (existing.id == id)
                throw ParseError("sidecar maps two indices to id '" + id.str() + "'");
        party->arguments.push_back({id, ""});
        if (id.round == 0) round0.push_back(id);
    }
    for (const auto& [attacker, target] : doc.framework.attacks())
        rf.attack_pairs.emplace_back(id_of[attacker], id_of[target]);

    if (round0.size() != 1)
        throw ParseError("sidecar ids must contain exactly one round-0 argument, found " +
                         std::to_string(round0.size()));
    rf.root = round0.front();
    return rf;
}

} // namespace revaf
