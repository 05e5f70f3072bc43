#include "zknead/sequence.hpp"

#include <algorithm>
#include <charconv>

#include "zknead/error.hpp"

namespace zknead {

void require_positive_entries(const Seq& s) {
    for (auto e : s)
        if (e < 1) fail(errc::nonpositive_entry, "sequence entries must be >= 1");
}

namespace {

// The empty sequence and (1) are pinched by doing nothing.
bool pinch_fixed(const Seq& s) { return s.empty() || (s.size() == 1 && s[0] == 1); }

} // namespace

Seq pinch_left(Seq s) {
    require_positive_entries(s);
    if (pinch_fixed(s)) return s;
    if (s[0] >= 2) {
        s[0] -= 1;
        s.insert(s.begin(), 1);
    } else {
        s.erase(s.begin());
        s[0] += 1;
    }
    return s;
}

Seq pinch_right(Seq s) {
    require_positive_entries(s);
    if (pinch_fixed(s)) return s;
    if (s.back() >= 2) {
        s.back() -= 1;
        s.push_back(1);
    } else {
        s.pop_back();
        s.back() += 1;
    }
    return s;
}

Seq knead(Seq s) {
    require_positive_entries(s);
    if (s.empty()) fail(errc::empty_sequence, "knead: empty sequence");
    const std::int64_t head = s.front();
    s.erase(s.begin());
    s = pinch_right(pinch_left(std::move(s)));
    s.push_back(head);
    return s;
}

Seq unknead(Seq s) {
    require_positive_entries(s);
    if (s.empty()) fail(errc::empty_sequence, "unknead: empty sequence");
    const std::int64_t tail = s.back();
    s.pop_back();
    s = pinch_right(pinch_left(std::move(s)));
    s.insert(s.begin(), tail);
    return s;
}

std::vector<Seq> kneading_cycle(const Seq& start) {
    require_positive_entries(start);
    if (start.empty()) fail(errc::empty_sequence, "kneading_cycle: empty sequence");
    std::vector<Seq> orbit;
    orbit.push_back(start);
    for (Seq cur = knead(start); cur != start; cur = knead(std::move(cur)))
        orbit.push_back(cur);
    return orbit;
}

std::int64_t seq_sum(const Seq& s) {
    require_positive_entries(s);
    if (s.empty()) fail(errc::empty_sequence, "seq_sum: empty sequence");
    std::int64_t total = 0;
    for (auto e : s) total += e;
    return total;
}

int length_parity(const Seq& s) {
    require_positive_entries(s);
    if (s.empty()) fail(errc::empty_sequence, "length_parity: empty sequence");
    return s.size() % 2 == 0 ? 0 : 1;
}

std::string format_seq(const Seq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

Seq parse_seq(std::string_view text) {
    Seq out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size() || value < 1)
            fail(errc::parse_error, "invalid sequence: " + std::string(text));
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) fail(errc::parse_error, "empty sequence");
    return out;
}

bool seq_less(const Seq& a, const Seq& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace zknead
