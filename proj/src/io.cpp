#include "poc/io.hpp"

#include <charconv>
#include <sstream>

namespace poc {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

unsigned sextet(char c)
{
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw ParseError("character code " + std::to_string(u) + " outside 63..126");
    return u - 63U;
}

} // namespace

Graph parse_graph6(std::string_view line, std::size_t cap)
{
    line = trim(line);
    if (line.substr(0, kHeader.size()) == kHeader)
        line.remove_prefix(kHeader.size());
    if (line.empty())
        throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](std::size_t count) {
        if (line.size() < pos + count)
            throw ParseError("truncated size prefix");
        for (std::size_t i = 0; i < count; ++i)
            n = (n << 6) | sextet(line[pos++]);
    };
    if (line[0] != '~') {
        take(1);
    } else if (line.size() > 1 && line[1] != '~') {
        pos = 1;
        take(3);
    } else {
        pos = 2;
        take(6);
    }
    if (n == 0)
        throw ParseError("graph6 with zero vertices");
    if (n > cap)
        throw ParseError("graph with " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(cap));

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t expected = (bits + 5) / 6;
    const std::uint64_t available = line.size() - pos;
    if (available < expected)
        throw ParseError("truncated bit vector: expected " + std::to_string(expected) + " data bytes, found " +
                         std::to_string(available));
    if (available > expected)
        throw ParseError("trailing data after " + std::to_string(expected) + " data bytes");

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            unsigned byte = sextet(line[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1U)
                edges.emplace_back(i, j);
        }
    }
    // Validate the padding characters too.
    for (std::uint64_t c = k / 6; c < expected; ++c)
        sextet(line[pos + c]);
    return Graph::from_edges(static_cast<std::size_t>(n), edges, cap);
}

std::string emit_graph6(const Graph& g)
{
    const std::uint64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
    } else {
        throw std::invalid_argument("graph6 emission supports at most 258047 vertices");
    }
    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

void for_each_graph6(std::istream& in, const std::function<void(Graph, std::size_t)>& sink, std::size_t cap)
{
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto body = trim(line);
        if (body.empty())
            continue;
        try {
            sink(parse_graph6(body, cap), number);
        } catch (const ParseError& e) {
            if (e.line() != 0)
                throw;
            throw ParseError(e.what(), number);
        } catch (const GraphError& e) {
            throw ParseError(e.what(), number);
        }
    }
}

GraphDocument parse_graph6_document(std::istream& in, std::size_t cap)
{
    GraphDocument doc;
    for_each_graph6(in, [&](Graph g, std::size_t line) { doc.entries.push_back({std::move(g), line}); }, cap);
    return doc;
}

namespace {

std::vector<long long> parse_numbers(std::string_view body, std::size_t line)
{
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && (body[i] == ' ' || body[i] == '\t'))
            ++i;
        if (i >= body.size())
            break;
        if (body[i] == '#')
            break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), value);
        if (ec != std::errc{} || (ptr != body.data() + body.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '#'))
            throw ParseError("malformed number in \"" + std::string(body) + "\"", line);
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - body.data());
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text, std::size_t cap)
{
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        auto body = trim(text.substr(start, end - start));
        start = end + 1;
        if (body.empty() || body.front() == '#')
            continue;
        auto nums = parse_numbers(body, line_no);
        if (nums.empty())
            continue;
        if (nums.size() != 2)
            throw ParseError("expected two integers, found " + std::to_string(nums.size()), line_no);
        if (!have_header) {
            n = nums[0];
            m = nums[1];
            if (n <= 0)
                throw ParseError("vertex count must be positive", line_no);
            if (m < 0)
                throw ParseError("edge count must be non-negative", line_no);
            if (static_cast<unsigned long long>(n) > cap)
                throw ParseError("graph with " + std::to_string(n) + " vertices exceeds the cap of " +
                                     std::to_string(cap),
                                 line_no);
            have_header = true;
            continue;
        }
        auto u = nums[0], v = nums[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                                 std::to_string(n - 1),
                             line_no);
        if (u == v)
            throw ParseError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")", line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        if (static_cast<long long>(edges.size()) > m)
            throw ParseError("more edge lines than the declared " + std::to_string(m), line_no);
    }
    if (!have_header)
        throw ParseError("missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()),
                         line_no);
    return Graph::from_edges(static_cast<std::size_t>(n), edges, cap);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream os;
    auto edges = g.edges();
    os << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        os << u << ' ' << v << '\n';
    return os.str();
}

std::string emit_dot(const Graph& g, std::string_view name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace poc
