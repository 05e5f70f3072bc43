#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zknead {

/// Finite sequence of positive integers, the substrate of kneading.
/// Entries stay tiny at census scale, so machine integers suffice; the
/// continuants built from them use arbitrary precision instead.
using Seq = std::vector<std::int64_t>;

/// Rejects entries < 1 (errc::nonpositive_entry).
void require_positive_entries(const Seq& s);

/// Splits a leading x >= 2 into (1, x-1), or absorbs a leading 1 into its
/// neighbour. Empty and (1) are fixed. Involution on everything else.
Seq pinch_left(Seq s);
Seq pinch_right(Seq s);

/// Remove the leftmost entry, pinch both ends of the remainder, append the
/// removed entry on the right. Length-1 sequences are fixed points.
Seq knead(Seq s);
/// Exact inverse of knead.
Seq unknead(Seq s);

/// Orbit of s under knead, starting at s, ending one step before s recurs.
std::vector<Seq> kneading_cycle(const Seq& s);

std::int64_t seq_sum(const Seq& s);
/// 0 for even length, 1 for odd.
int length_parity(const Seq& s);

std::string format_seq(const Seq& s);        // "2,2,3,6"
Seq parse_seq(std::string_view text);        // errc::parse_error on junk

/// Strict lexicographic order (a proper prefix precedes its extensions).
bool seq_less(const Seq& a, const Seq& b);

} // namespace zknead
