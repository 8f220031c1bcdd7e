"""List the five SNAP networks used for the dataset-statistics check, or verify a download.

Usage:
    python scripts/snap_datasets.py                 # list names and expected sizes
    python scripts/snap_datasets.py check FILE NAME # parse FILE, compare n and m

Files go in tests/data/snap/ (or $COLORTRI_SNAP_DIR) as <NAME>.txt or
<NAME>.txt.gz. The tool never downloads anything; fetch the edge lists by
hand from the SNAP collection (https://snap.stanford.edu/data/).
"""

import sys

from colortri.graph import read_edge_list

DATASETS = [
    ("AS", "autonomous systems graph (as-733 snapshots)", 7716, 12572),
    ("Oregon", "Oregon route-views AS graph", 11492, 23409),
    ("Enron", "email-Enron", 36692, 183831),
    ("ca-HepPh", "ca-HepPh collaboration network", 12008, 118489),
    ("AstroPh", "ca-AstroPh collaboration network", 18772, 198050),
]


def main(argv):
    if not argv:
        print(f"{'file name':<14} {'nodes':>7} {'edges':>8}  SNAP dataset")
        for name, desc, n, m in DATASETS:
            print(f"{name + '.txt':<14} {n:>7} {m:>8}  {desc}")
        print("\nedges are counted after dropping self-loops and merging both directions")
        return 0
    if argv[0] == "check" and len(argv) == 3:
        sizes = {name: (n, m) for name, _, n, m in DATASETS}
        g = read_edge_list(argv[1])
        want = sizes[argv[2]]
        print(f"{argv[1]}: n={g.n} m={g.m}, expected n={want[0]} m={want[1]}")
        return 0 if (g.n, g.m) == want else 1
    print(__doc__)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
