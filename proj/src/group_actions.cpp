#include "spherediv/group_actions.hpp"

#include <cctype>
#include <sstream>

namespace spherediv {

bool GroupWord::reduced() const
{
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i].generator == letters[i - 1].generator && letters[i].exponent == -letters[i - 1].exponent) return false;
    }
    return true;
}

GroupWord GroupWord::reduce() const
{
    GroupWord out;
    for (const auto& l : letters) {
        if (!out.letters.empty() && out.letters.back().generator == l.generator && out.letters.back().exponent == -l.exponent) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

GroupWord parse_word(std::string_view text)
{
    GroupWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "e") continue;
        const std::string original = tok;
        if (tok.size() < 2 || tok[0] != 'g') throw InputError("bad word letter: " + original);
        std::size_t pos = 1;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == 1) throw InputError("bad word letter: " + original);
        const long index = std::stol(tok.substr(1, pos - 1));
        if (index < 1) throw InputError("generators are numbered from g1: " + original);
        long power = 1;
        if (pos < tok.size()) {
            if (tok[pos] != '^') throw InputError("bad word letter: " + original);
            try {
                std::size_t used = 0;
                power = std::stol(tok.substr(pos + 1), &used);
                if (used != tok.size() - pos - 1) throw InputError("bad exponent: " + original);
            } catch (const std::logic_error&) {
                throw InputError("bad exponent: " + original);
            }
            if (power == 0 || power > 1000 || power < -1000) throw InputError("exponent out of range: " + original);
        }
        const int sign = power > 0 ? 1 : -1;
        for (long k = 0; k < (power > 0 ? power : -power); ++k) w.letters.push_back({static_cast<std::size_t>(index - 1), sign});
    }
    return w;
}

std::string to_string(const GroupWord& w)
{
    if (w.letters.empty()) return "e";
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += ' ';
        s += "g" + std::to_string(l.generator + 1);
        if (l.exponent < 0) s += "^-1";
    }
    return s;
}

std::vector<GroupWord> parse_words(std::string_view text)
{
    std::vector<GroupWord> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_word(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<GroupWord> reduced_words(std::size_t r, std::size_t max_length)
{
    std::vector<GroupWord> out;
    std::vector<GroupWord> layer{GroupWord{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<GroupWord> next;
        for (const auto& w : layer) {
            for (std::size_t g = 0; g < r; ++g) {
                for (int e : {1, -1}) {
                    if (!w.letters.empty() && w.letters.back().generator == g && w.letters.back().exponent == -e) continue;
                    GroupWord v = w;
                    v.letters.push_back({g, e});
                    next.push_back(std::move(v));
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

} // namespace spherediv
