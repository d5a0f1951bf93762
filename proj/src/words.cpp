#include "fstrand/words.hpp"

#include "fstrand/error.hpp"

#include <cctype>

namespace fstrand {

namespace {

void skip(std::string_view s, std::size_t& i)
{
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*' || s[i] == '.'))
        ++i;
}

long read_int(std::string_view s, std::size_t& i)
{
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected an exponent", i);
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000)
            throw ParseError("exponent too large", i);
        ++i;
    }
    return neg ? -v : v;
}

}  // namespace

Word parse_word(std::string_view text)
{
    Word w;
    std::size_t i = 0;
    skip(text, i);
    if (text.substr(i) == "id" || text.substr(i) == "1")
        return w;
    while (skip(text, i), i < text.size()) {
        if (text[i] != 'x')
            throw ParseError(std::string("expected generator x0 or x1, found '") + text[i] + "'", i);
        ++i;
        if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
            throw ParseError("generator index must be 0 or 1", i);
        const int gen = text[i] - '0';
        ++i;
        long e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            e = read_int(text, i);
        }
        for (long k = 0; k < (e < 0 ? -e : e); ++k)
            w.push_back({gen, e < 0});
    }
    return w;
}

std::string format_word(const Word& w)
{
    if (w.empty())
        return "id";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += ' ';
        out += "x" + std::to_string(w[i].gen);
        const long e = static_cast<long>(j - i) * (w[i].inverse ? -1 : 1);
        if (e != 1)
            out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

Word inverse(const Word& w)
{
    Word r(w.rbegin(), w.rend());
    for (auto& l : r)
        l.inverse = !l.inverse;
    return r;
}

const PLMap& generator_map(const Letter& l)
{
    static const PLMap inv0 = invert(x0());
    static const PLMap inv1 = invert(x1());
    if (l.gen == 0)
        return l.inverse ? inv0 : x0();
    return l.inverse ? inv1 : x1();
}

const StrandDiagram& generator_diagram(const Letter& l)
{
    static const StrandDiagram d[4] = {
        from_tree_pair(parse_tree("(*(**))"), parse_tree("((**)*)")),
        from_tree_pair(parse_tree("((**)*)"), parse_tree("(*(**))")),
        from_tree_pair(parse_tree("(*(*(**)))"), parse_tree("(*((**)*))")),
        from_tree_pair(parse_tree("(*((**)*))"), parse_tree("(*(*(**)))")),
    };
    return d[l.gen * 2 + (l.inverse ? 1 : 0)];
}

PLMap word_map(const Word& w)
{
    PLMap f = PLMap::identity(1);
    for (const auto& l : w)
        f = compose(f, generator_map(l));
    return f;
}

StrandDiagram word_diagram(const Word& w)
{
    StrandDiagram d = StrandDiagram::trivial(1);
    for (const auto& l : w)
        d = concatenate(d, generator_diagram(l));
    return d;
}

std::vector<Word> all_words(int max_len)
{
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (int g = 0; g < 2; ++g)
                for (int inv = 0; inv < 2; ++inv) {
                    Word w = out[i];
                    w.push_back({g, inv == 1});
                    out.push_back(std::move(w));
                }
        begin = end;
    }
    return out;
}

}  // namespace fstrand
