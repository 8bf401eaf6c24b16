#include "hamcon/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <vector>

#include "hamcon/error.hpp"

namespace hamcon {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

void put_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }
}

int sixbits(char c) {
    if (c < 63 || c > 126) {
        parse_error("byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) + " outside 63..126");
    }
    return c - 63;
}

std::uint64_t take_size(std::string_view& s) {
    if (s.empty()) {
        parse_error("missing vertex count");
    }
    int width = 1;
    std::size_t skip = 0;
    if (s[0] == 126) {
        if (s.size() > 1 && s[1] == 126) {
            width = 6;
            skip = 2;
        } else {
            width = 3;
            skip = 1;
        }
    }
    if (s.size() < skip + static_cast<std::size_t>(width)) {
        parse_error("truncated vertex count");
    }
    std::uint64_t n = 0;
    for (int i = 0; i < width; ++i) {
        n = (n << 6) | static_cast<std::uint64_t>(sixbits(s[skip + static_cast<std::size_t>(i)]));
    }
    s.remove_prefix(skip + static_cast<std::size_t>(width));
    return n;
}

class BitWriter {
public:
    void put(std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) {
            put_bit((value >> i) & 1U);
        }
    }
    void put_bit(std::uint64_t b) {
        cur_ = static_cast<int>((cur_ << 1) | static_cast<int>(b));
        if (++filled_ == 6) {
            out_.push_back(static_cast<char>(cur_ + 63));
            cur_ = 0;
            filled_ = 0;
        }
    }
    int free_bits() const { return filled_ == 0 ? 0 : 6 - filled_; }
    std::string& str() { return out_; }

private:
    std::string out_;
    int cur_ = 0;
    int filled_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::string_view s) : s_(s) {}
    std::size_t remaining() const { return s_.size() * 6 - pos_; }
    std::uint64_t get(int width) {
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) {
            std::size_t byte = pos_ / 6;
            int shift = 5 - static_cast<int>(pos_ % 6);
            v = (v << 1) | static_cast<std::uint64_t>((sixbits(s_[byte]) >> shift) & 1);
            ++pos_;
        }
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string_view drop_header(std::string_view s, std::string_view header) {
    if (s.substr(0, header.size()) == header) {
        s.remove_prefix(header.size());
    }
    return s;
}

void check_size(std::uint64_t n) {
    if (n > 1'000'000) {
        throw Error(ErrorKind::SizeLimit, "vertex count " + std::to_string(n) + " is too large");
    }
}

}  // namespace

std::string encode_graph6(const SimpleGraph& g) {
    std::string out;
    int n = g.vertex_count();
    put_size(out, static_cast<std::uint64_t>(n));
    BitWriter w;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            w.put_bit(g.adjacent(VertexId{i}, VertexId{j}) ? 1 : 0);
        }
    }
    while (w.free_bits() != 0) {
        w.put_bit(0);
    }
    return out + w.str();
}

SimpleGraph decode_graph6(std::string_view line) {
    std::string_view s = drop_header(strip(line), ">>graph6<<");
    std::uint64_t n64 = take_size(s);
    check_size(n64);
    int n = static_cast<int>(n64);
    std::uint64_t bits = n64 * (n64 - (n64 > 0 ? 1 : 0)) / 2;
    std::uint64_t bytes = (bits + 5) / 6;
    if (s.size() != bytes) {
        parse_error("expected " + std::to_string(bytes) + " data bytes for " + std::to_string(n) + " vertices, got " +
                    std::to_string(s.size()));
    }
    BitReader r(s);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (r.get(1)) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (r.remaining() > 0 && r.get(static_cast<int>(r.remaining())) != 0) {
        parse_error("nonzero padding bits");
    }
    return SimpleGraph(n, edges);
}

std::string encode_sparse6(const Multigraph& g) {
    int n = g.vertex_count();
    std::string out = ":";
    put_size(out, static_cast<std::uint64_t>(n));
    int k = 0;
    while ((n - 1) >> k > 0) {
        ++k;
    }
    std::vector<std::pair<int, int>> edges;  // (larger, smaller)
    for (const auto& ep : g.edges()) {
        edges.emplace_back(std::max(ep.u.index, ep.v.index), std::min(ep.u.index, ep.v.index));
    }
    std::sort(edges.begin(), edges.end());
    BitWriter w;
    int v = 0;
    for (auto [j, i] : edges) {
        if (j == v) {
            w.put_bit(0);
        } else if (j == v + 1) {
            w.put_bit(1);
        } else {
            w.put_bit(1);
            w.put(static_cast<std::uint64_t>(j), k);
            w.put_bit(0);
        }
        v = j;
        w.put(static_cast<std::uint64_t>(i), k);
    }
    int pad = w.free_bits();
    if (pad > 0) {
        if (pad >= k + 1 && v == n - 2 && n == (1 << k)) {
            // All-ones padding would read back as a loop at n-1.
            w.put_bit(0);
            --pad;
        }
        for (; pad > 0; --pad) {
            w.put_bit(1);
        }
    }
    return out + w.str();
}

Multigraph decode_sparse6(std::string_view line) {
    std::string_view s = drop_header(strip(line), ">>sparse6<<");
    if (s.empty() || s[0] != ':') {
        parse_error("sparse6 must start with ':'");
    }
    s.remove_prefix(1);
    std::uint64_t n64 = take_size(s);
    check_size(n64);
    int n = static_cast<int>(n64);
    int k = 0;
    while ((n - 1) >> k > 0) {
        ++k;
    }
    Multigraph g(n);
    BitReader r(s);
    std::uint64_t v = 0;
    while (r.remaining() >= static_cast<std::size_t>(k + 1)) {
        if (r.get(1)) {
            ++v;
        }
        if (v >= n64) {
            break;
        }
        std::uint64_t x = r.get(k);
        if (x > v) {
            v = x;
        } else {
            g.add_edge(VertexId{static_cast<int>(x)}, VertexId{static_cast<int>(v)});
        }
    }
    return g;
}

std::string encode_edgelist(const Multigraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& ep : g.edges()) {
        out += std::to_string(ep.u.index) + " " + std::to_string(ep.v.index) + "\n";
    }
    return out;
}

Multigraph decode_edgelist(std::string_view text) {
    std::vector<std::vector<long long>> rows;
    std::vector<int> row_line;
    int line_no = 0;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<long long> nums;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            long long x = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), x);
            if (ec != std::errc() || x < 0) {
                parse_error("line " + std::to_string(line_no) + ": expected a non-negative integer");
            }
            nums.push_back(x);
            i = static_cast<std::size_t>(ptr - line.data());
        }
        if (nums.empty()) {
            continue;
        }
        if (nums.size() != 2) {
            parse_error("line " + std::to_string(line_no) + ": expected two integers");
        }
        rows.push_back(std::move(nums));
        row_line.push_back(line_no);
    }
    if (rows.empty()) {
        parse_error("missing 'n m' header");
    }
    long long n = rows[0][0];
    long long m = rows[0][1];
    check_size(static_cast<std::uint64_t>(n));
    if (static_cast<long long>(rows.size()) - 1 != m) {
        parse_error("header announces " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));
    }
    Multigraph g(static_cast<int>(n));
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r][0] >= n || rows[r][1] >= n) {
            parse_error("line " + std::to_string(row_line[r]) + ": vertex index out of range for n = " +
                        std::to_string(n));
        }
        g.add_edge(VertexId{static_cast<int>(rows[r][0])}, VertexId{static_cast<int>(rows[r][1])});
    }
    return g;
}

}  // namespace hamcon
