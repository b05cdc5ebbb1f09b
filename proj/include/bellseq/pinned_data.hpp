#pragma once

namespace bellseq {

// Embedded copy of data/pinned.seq. The file is the versioned source of
// truth; a test asserts the two parse identically so they cannot drift.
inline constexpr const char* kPinnedRecords = R"(# bellseq pinned sequence prefixes
# format: key|oeis_id|offset|t1,t2,...|provenance
# offset is the index of the first listed term under the library's 1-indexed
# reading of the sequence (i.e. term i listed here is x_{offset+i-1}).
large_schroeder|A006318|1|1,2,6,22,90,394,1806,8558,41586,206098|OEIS A006318 (large Schroeder numbers, listed from a(0)), pinned 2026-08-23
A000168|A000168|1|2,9,54,378,2916,24057,208494,1876446,17399772,165297834,1602117468,15792300756|OEIS A000168 (rooted planar maps with n edges, listed from a(1)), pinned 2026-08-23
A000139|A000139|1|2,1,2,6,22,91,408,1938,9614,49335,260130,1402440|OEIS A000139 listed from a(0); used as the nonseparable-map series b with b_1 = 2, pinned 2026-08-23
A022558|A022558|1|1,2,6,23,103,512,2740,15485,91245,555662|OEIS A022558 (permutations avoiding 2413, listed from a(1)), pinned 2026-08-23
A298358|A298358|1|1,0,0,1,0,3,7,15,63,168,561,1881,6110,21087|OEIS A298358 (rooted 3-connected bicubic maps, listed from a(1)), pinned 2026-08-23
)";

}  // namespace bellseq
