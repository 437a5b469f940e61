#include "mono/files.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mono {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_int(const Token& tok, int line_no) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok.text, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, tok.column, "expected an integer, got '" + tok.text + "'");
    }
    if (pos != tok.text.size())
        throw ParseError(line_no, tok.column, "malformed integer '" + tok.text + "'");
    return value;
}

enum class Mode { Unset, TheoryMode, QuiverMode, ChargeMode };

void require_mode(Mode& mode, Mode wanted, int line_no, int col) {
    if (mode == Mode::Unset)
        mode = wanted;
    else if (mode != wanted)
        throw ParseError(line_no, col, "directives from different file modes cannot be mixed");
}

} // namespace

ParsedInput parse_theory_file(const std::string& text) {
    Mode mode = Mode::Unset;
    Theory theory;
    ParsedQuiver quiver;
    bool quiver_declared = false, v_seen = false, w_seen = false;
    IntMat charge_rows;
    int charge_d = -1;
    bool charges_declared = false;

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto toks = tokenize(line);
        if (toks.empty())
            continue;
        const std::string& head = toks[0].text;

        if (head == "gauge") {
            require_mode(mode, Mode::TheoryMode, line_no, toks[0].column);
            if (toks.size() != 3 || toks[1].text != "GL")
                throw ParseError(line_no, toks.size() > 1 ? toks[1].column : toks[0].column,
                                 "expected 'gauge GL <n>'");
            const long long n = parse_int(toks[2], line_no);
            if (n < 1)
                throw ParseError(line_no, toks[2].column, "GL factor size must be at least 1");
            theory.group.factors.push_back(static_cast<int>(n));
        } else if (head == "weight") {
            require_mode(mode, Mode::TheoryMode, line_no, toks[0].column);
            const int rank = theory.group.rank();
            if (rank == 0)
                throw ParseError(line_no, toks[0].column,
                                 "weight line before any gauge factor");
            long long mult = 1;
            std::size_t count = toks.size() - 1;
            if (count == static_cast<std::size_t>(rank) + 1) {
                const Token& last = toks.back();
                if (last.text.size() < 2 || last.text[0] != 'x')
                    throw ParseError(line_no, last.column,
                                     "expected multiplicity suffix 'x<m>'");
                mult = parse_int({last.text.substr(1), last.column + 1}, line_no);
                if (mult < 1)
                    throw ParseError(line_no, last.column, "multiplicity must be at least 1");
                --count;
            }
            if (count != static_cast<std::size_t>(rank))
                throw ParseError(line_no, toks[0].column,
                                 "weight has " + std::to_string(count) +
                                     " coordinates, expected " + std::to_string(rank));
            IntVec w(static_cast<std::size_t>(rank));
            for (int i = 0; i < rank; ++i)
                w[static_cast<std::size_t>(i)] = parse_int(toks[static_cast<std::size_t>(i) + 1], line_no);
            theory.matter.push_back(MatterWeight{std::move(w), mult});
        } else if (head == "quiver") {
            require_mode(mode, Mode::QuiverMode, line_no, toks[0].column);
            if (quiver_declared)
                throw ParseError(line_no, toks[0].column, "duplicate quiver declaration");
            if (toks.size() != 3 || toks[1].text.size() != 1)
                throw ParseError(line_no, toks[0].column, "expected 'quiver <SERIES> <rank>'");
            try {
                quiver.flavor_series = series_from_char(toks[1].text[0]);
            } catch (const ValidationError& e) {
                throw ParseError(line_no, toks[1].column, e.what());
            }
            const long long rank = parse_int(toks[2], line_no);
            if (rank < 1)
                throw ParseError(line_no, toks[2].column, "rank must be at least 1");
            quiver.flavor_rank = static_cast<int>(rank);
            quiver.quiver.vertices = static_cast<int>(rank);
            quiver.quiver.dim_v.assign(static_cast<std::size_t>(rank), 0);
            quiver.quiver.dim_w.assign(static_cast<std::size_t>(rank), 0);
            quiver_declared = true;
        } else if (head == "edge" || head == "v" || head == "w") {
            require_mode(mode, Mode::QuiverMode, line_no, toks[0].column);
            if (!quiver_declared)
                throw ParseError(line_no, toks[0].column,
                                 "'" + head + "' before the quiver declaration");
            const int rank = quiver.flavor_rank;
            if (head == "edge") {
                if (toks.size() != 3)
                    throw ParseError(line_no, toks[0].column, "expected 'edge <i> <j>'");
                const long long a = parse_int(toks[1], line_no);
                const long long b = parse_int(toks[2], line_no);
                if (a < 1 || a > rank)
                    throw ParseError(line_no, toks[1].column, "edge endpoint out of range");
                if (b < 1 || b > rank)
                    throw ParseError(line_no, toks[2].column, "edge endpoint out of range");
                quiver.quiver.edges.emplace_back(static_cast<int>(a) - 1,
                                                 static_cast<int>(b) - 1);
            } else {
                const bool is_v = head == "v";
                bool& seen = is_v ? v_seen : w_seen;
                if (seen)
                    throw ParseError(line_no, toks[0].column, "duplicate '" + head + "' line");
                seen = true;
                if (toks.size() != static_cast<std::size_t>(rank) + 1)
                    throw ParseError(line_no, toks[0].column,
                                     "'" + head + "' needs " + std::to_string(rank) +
                                         " integers");
                auto& dims = is_v ? quiver.quiver.dim_v : quiver.quiver.dim_w;
                for (int i = 0; i < rank; ++i) {
                    const long long val = parse_int(toks[static_cast<std::size_t>(i) + 1], line_no);
                    if (val < 0)
                        throw ParseError(line_no, toks[static_cast<std::size_t>(i) + 1].column,
                                         "dimensions must be non-negative");
                    dims[static_cast<std::size_t>(i)] = static_cast<int>(val);
                }
            }
        } else if (head == "charges") {
            require_mode(mode, Mode::ChargeMode, line_no, toks[0].column);
            if (charges_declared)
                throw ParseError(line_no, toks[0].column, "duplicate charges declaration");
            if (toks.size() != 1)
                throw ParseError(line_no, toks[1].column, "'charges' takes no arguments");
            charges_declared = true;
        } else if (head == "row") {
            require_mode(mode, Mode::ChargeMode, line_no, toks[0].column);
            if (!charges_declared)
                throw ParseError(line_no, toks[0].column, "'row' before 'charges'");
            if (toks.size() < 2)
                throw ParseError(line_no, toks[0].column, "row needs at least one integer");
            IntVec row(toks.size() - 1);
            for (std::size_t i = 1; i < toks.size(); ++i)
                row[i - 1] = parse_int(toks[i], line_no);
            if (charge_d < 0)
                charge_d = static_cast<int>(row.size());
            else if (static_cast<int>(row.size()) != charge_d)
                throw ParseError(line_no, toks[0].column,
                                 "row length " + std::to_string(row.size()) +
                                     " differs from earlier rows (" +
                                     std::to_string(charge_d) + ")");
            charge_rows.push_back(std::move(row));
        } else {
            throw ParseError(line_no, toks[0].column, "unknown directive '" + head + "'");
        }
    }

    switch (mode) {
    case Mode::TheoryMode: {
        // canonical form: weights merged and sorted, so parse(render(x)) == x
        std::map<IntVec, long long> merged;
        for (auto& m : theory.matter)
            merged[std::move(m.weight)] += m.mult;
        theory.matter.clear();
        for (auto& [w, mult] : merged)
            theory.matter.push_back(MatterWeight{w, mult});
        return theory;
    }
    case Mode::QuiverMode:
        std::sort(quiver.quiver.edges.begin(), quiver.quiver.edges.end());
        return quiver;
    case Mode::ChargeMode:
        if (charge_d < 0)
            throw ParseError(line_no + 1, 1, "charges file has no rows");
        return ChargeData::make(charge_d, std::move(charge_rows));
    case Mode::Unset:
        break;
    }
    throw ParseError(1, 1, "file contains no directives");
}

namespace {

std::string render_theory(const Theory& t) {
    std::ostringstream out;
    for (int n : t.group.factors)
        out << "gauge GL " << n << "\n";
    std::map<IntVec, long long> merged;
    for (const auto& m : t.matter)
        merged[m.weight] += m.mult;
    for (const auto& [w, mult] : merged) {
        out << "weight";
        for (long long c : w)
            out << " " << c;
        if (mult != 1)
            out << " x" << mult;
        out << "\n";
    }
    return out.str();
}

std::string render_quiver(const ParsedQuiver& p) {
    std::ostringstream out;
    out << "quiver " << series_to_char(p.flavor_series) << " " << p.flavor_rank << "\n";
    auto edges = p.quiver.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [t, h] : edges)
        out << "edge " << t + 1 << " " << h + 1 << "\n";
    out << "v";
    for (int d : p.quiver.dim_v)
        out << " " << d;
    out << "\nw";
    for (int d : p.quiver.dim_w)
        out << " " << d;
    out << "\n";
    return out.str();
}

std::string render_charges(const ChargeData& c) {
    std::ostringstream out;
    out << "charges\n";
    for (const auto& row : c.gauge_charges) {
        out << "row";
        for (long long v : row)
            out << " " << v;
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string render_canonical(const ParsedInput& input) {
    if (const auto* t = std::get_if<Theory>(&input))
        return render_theory(*t);
    if (const auto* q = std::get_if<ParsedQuiver>(&input))
        return render_quiver(*q);
    return render_charges(std::get<ChargeData>(input));
}

} // namespace mono
