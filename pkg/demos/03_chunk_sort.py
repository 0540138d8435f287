"""
Chunk-sorting: cheaper than sorting, ordered where it counts
============================================================

A k-chunk-sort splits an array into at most ~k chunks so that everything in
an earlier chunk is >= everything in a later one, while the inside of each
chunk stays unordered.  That costs O(n log k) comparisons instead of
O(n log n), which is the whole trick behind the epoch algorithms: they only
need to know roughly where the answer sits, then zoom in.
"""

from frechet import Counters, Entry, SplitMix64, chunk_sort

rng = SplitMix64(4)
keys = [float(rng.next_u64() % 100) for _ in range(24)]
entries = [Entry(k, i, 0) for i, k in enumerate(keys)]

print("input keys:")
print(" ", [int(k) for k in keys])

for k in (1, 4, 24):
    counters = Counters()
    plan = chunk_sort([Entry(x, i, 0) for i, x in enumerate(keys)], k, counters=counters)
    print(f"\nk={k}: {len(plan.boundaries)} chunks, "
          f"{counters.key_comparisons} key comparisons")
    for chunk in plan.chunks():
        print("   ", [int(e.key) for e in chunk])

# k equal to the array length degenerates to a full descending sort, and the
# comparison count grows with log k, not with k itself
print("\ncomparisons as k doubles (n = 4096):")
big = [float(rng.next_u64() % 512) for _ in range(4096)]
for k in (2, 8, 64, 512, 4096):
    counters = Counters()
    chunk_sort([Entry(x, i, 0) for i, x in enumerate(big)], k, counters=counters)
    print(f"  k={k:<5d} comparisons={counters.key_comparisons}")
