#include "bdist/lts.hpp"

#include "bdist/error.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace bdist {

std::set<Label> Lts::alphabet() const {
    std::set<Label> result;
    for (const auto& t : transitions_)
        result.insert(t.label);
    return result;
}

bool Lts::has_numeric_labels() const {
    return !transitions_.empty() &&
           std::all_of(transitions_.begin(), transitions_.end(), [](const Transition& t) { return t.label.is_numeric(); });
}

std::string Diagnostic::describe() const {
    switch (kind) {
    case Kind::BadInitial:
        return "initial state '" + subject + "' is not a declared state";
    case Kind::UndeclaredState:
        return "transition refers to undeclared state '" + subject + "'";
    case Kind::Blocking:
        return "state '" + subject + "' is blocking (no outgoing transition)";
    case Kind::MixedLabels:
        return "labels mix symbolic and numeric values (e.g. '" + subject + "')";
    }
    return subject;
}

std::vector<Diagnostic> validate(const Lts& lts) {
    std::vector<Diagnostic> result;
    if (!lts.states().contains(lts.initial()))
        result.push_back({Diagnostic::Kind::BadInitial, lts.initial()});

    std::set<std::string> undeclared;
    std::set<std::string> with_successor;
    for (const auto& t : lts.transitions()) {
        for (const auto* endpoint : {&t.source, &t.target})
            if (!lts.states().contains(*endpoint))
                undeclared.insert(*endpoint);
        with_successor.insert(t.source);
    }
    for (const auto& s : undeclared)
        result.push_back({Diagnostic::Kind::UndeclaredState, s});

    for (const auto& s : lts.states())
        if (!with_successor.contains(s))
            result.push_back({Diagnostic::Kind::Blocking, s});

    const Transition* first_numeric = nullptr;
    const Transition* first_symbolic = nullptr;
    for (const auto& t : lts.transitions()) {
        auto& slot = t.label.is_numeric() ? first_numeric : first_symbolic;
        if (slot == nullptr)
            slot = &t;
    }
    if (first_numeric != nullptr && first_symbolic != nullptr)
        result.push_back({Diagnostic::Kind::MixedLabels, first_symbolic->label.text()});

    return result;
}

void require_valid(const Lts& lts) {
    auto diagnostics = validate(lts);
    if (diagnostics.empty())
        return;
    std::vector<std::string> problems;
    for (const auto& d : diagnostics)
        problems.push_back(d.describe());
    throw ValidationError(std::move(problems));
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

} // namespace

Lts parse_lts(std::string_view text) {
    std::set<std::string> states;
    std::optional<std::string> initial;
    std::set<Transition> transitions;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;

        // The directive may be glued to its first argument ("init:s0").
        std::string_view head = tokens.front().text;
        auto colon = head.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(line_no, tokens.front().column, "expected 'states:', 'init:' or 'trans:'");
        std::string_view directive = head.substr(0, colon + 1);
        std::vector<Token> args;
        if (colon + 1 < head.size())
            args.push_back({head.substr(colon + 1), tokens.front().column + colon + 1});
        args.insert(args.end(), tokens.begin() + 1, tokens.end());

        if (directive == "states:") {
            if (args.empty())
                throw ParseError(line_no, tokens.front().column, "'states:' needs at least one state");
            for (const auto& a : args)
                states.emplace(a.text);
        } else if (directive == "init:") {
            if (args.size() != 1)
                throw ParseError(line_no, tokens.front().column, "'init:' takes exactly one state");
            if (initial)
                throw ParseError(line_no, tokens.front().column, "duplicate 'init:'");
            initial = std::string(args.front().text);
        } else if (directive == "trans:") {
            if (args.size() != 3) {
                std::size_t column = args.size() > 3 ? args[3].column : tokens.front().column;
                throw ParseError(line_no, column, "'trans:' takes <source> <label> <target>");
            }
            transitions.insert(Transition{std::string(args[0].text), Label::parse(args[1].text), std::string(args[2].text)});
        } else {
            throw ParseError(line_no, tokens.front().column, "unknown directive '" + std::string(directive) + "'");
        }
    }

    if (!initial)
        throw ParseError(line_no, 0, "missing 'init:' line");

    Lts result(std::move(states), std::move(*initial), std::move(transitions));
    require_valid(result);
    return result;
}

std::string serialize(const Lts& lts) {
    std::ostringstream out;
    out << "states:";
    for (const auto& s : lts.states())
        out << ' ' << s;
    out << "\ninit: " << lts.initial() << '\n';
    for (const auto& t : lts.transitions())
        out << "trans: " << t.source << ' ' << t.label.text() << ' ' << t.target << '\n';
    return out.str();
}

IndexedLts IndexedLts::from(const Lts& lts) {
    require_valid(lts);
    IndexedLts result;
    std::map<std::string, std::size_t> index;
    for (const auto& s : lts.states()) {
        index.emplace(s, result.names.size());
        result.names.push_back(s);
    }
    result.initial = index.at(lts.initial());
    result.out.resize(result.names.size());
    for (const auto& t : lts.transitions())
        result.out[index.at(t.source)].emplace_back(t.label, index.at(t.target));
    for (auto& succ : result.out)
        std::sort(succ.begin(), succ.end());
    return result;
}

} // namespace bdist
