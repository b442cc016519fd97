#include "bdist/label_distance.hpp"

#include "bdist/error.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdist {

void LabelDistance::set(const Label& a, const Label& b, ExtValue value) {
    if (a == b && !value.is_zero())
        throw std::invalid_argument("d(" + a.text() + ", " + a.text() + ") must be 0, got " + value.to_string());
    table_.insert_or_assign({a, b}, std::move(value));
}

ExtValue LabelDistance::operator()(const Label& a, const Label& b) const {
    if (a == b)
        return 0;
    if (auto it = table_.find({a, b}); it != table_.end())
        return it->second;
    return rule_ == DefaultRule::ZeroElseOne ? ExtValue(1) : ExtValue::infinity();
}

bool LabelDistance::has_infinity(const std::set<Label>& alphabet) const {
    for (const auto& a : alphabet)
        for (const auto& b : alphabet)
            if ((*this)(a, b).is_infinite())
                return true;
    return false;
}

LabelDistance parse_label_distance(std::string_view text, const std::set<Label>& alphabet) {
    struct Entry {
        std::size_t line;
        Label a, b;
        ExtValue value;
    };
    std::optional<DefaultRule> rule;
    std::vector<Entry> entries;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i > start)
                tokens.push_back(line.substr(start, i - start));
        }
        if (tokens.empty())
            continue;

        if (tokens[0] == "default:" || tokens[0].starts_with("default:")) {
            std::string value = tokens[0].size() > 8 ? tokens[0].substr(8) : (tokens.size() == 2 ? tokens[1] : "");
            if (rule)
                throw ParseError(line_no, 1, "duplicate 'default:' header");
            if (value == "eq0-else1")
                rule = DefaultRule::ZeroElseOne;
            else if (value == "eq0-elseinf")
                rule = DefaultRule::ZeroElseInfinity;
            else
                throw ParseError(line_no, 1, "expected 'default: eq0-else1' or 'default: eq0-elseinf'");
            continue;
        }
        if (tokens[0] != "d" || tokens.size() != 4)
            throw ParseError(line_no, 1, "expected 'd <label> <label> <value>'");

        Label a = Label::parse(tokens[1]);
        Label b = Label::parse(tokens[2]);
        for (const auto* l : {&a, &b})
            if (!alphabet.contains(*l))
                throw ParseError(line_no, 0, "label '" + l->text() + "' is not in the alphabet");

        ExtValue value;
        if (tokens[3] == "inf") {
            value = ExtValue::infinity();
        } else {
            auto q = try_parse_rational(tokens[3]);
            if (!q)
                throw ParseError(line_no, 0, "not a rational value: '" + tokens[3] + "'");
            if (sgn(*q) < 0)
                throw ParseError(line_no, 0, "negative distance " + tokens[3]);
            value = *q;
        }
        if (a == b && !value.is_zero())
            throw ParseError(line_no, 0, "d(" + a.text() + ", " + a.text() + ") must be 0");
        entries.push_back({line_no, std::move(a), std::move(b), std::move(value)});
    }

    LabelDistance result(rule.value_or(DefaultRule::ZeroElseOne));
    for (auto& e : entries)
        result.set(e.a, e.b, std::move(e.value));
    return result;
}

} // namespace bdist
