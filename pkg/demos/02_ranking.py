"""
Ranking benchmark candidates
============================

Candidates are filtered by chain length and resolution, then ranked by
decreasing volume per residue or by increasing minimum component ratio.
The bundled reference table holds the 21 published benchmark rows.
"""

# %%
from cpdtw.selection import Criterion, filter_candidates, rank, reference_table, take_top, top_overlap

rows = reference_table()
# The reference rows carry no resolution, so that check is switched off.
kept = filter_candidates(rows, min_len=100, max_len=300, max_resolution=None)
print(len(rows), "reference rows,", len(kept), "inside the length window")

# %%
by_volume = rank(kept, Criterion.VOLUME_DESC)
by_ratio = rank(kept, Criterion.MIN_RATIO_ASC)
print("volume   :", " ".join(take_top(by_volume, 8).ids))
print("min ratio:", " ".join(take_top(by_ratio, 8).ids))

# %%
# The two criteria disagree on ordering but share most of the top entries.
for n in (5, 10, 21):
    print(f"top {n:2d} overlap: {top_overlap(by_volume, by_ratio, n)}")
