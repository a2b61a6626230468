#!/usr/bin/env python3
"""Regenerate the committed graph6 corpora under corpora/.

Sources:
  * networkx's graph atlas supplies every graph on up to 7 vertices;
  * connected graphs on 8 vertices are produced by augmenting each
    connected 7-vertex graph with one new vertex over all nonempty
    neighborhoods, deduplicated up to isomorphism.

The script verifies the per-order class counts against the published
sequences (all graphs: 1,2,4,11,34,156,1044,12346; connected:
1,1,2,6,21,112,853,11117) and checks pairwise non-isomorphism within
signature buckets, so a successful run certifies the corpora complete.

Dev tooling only; the shipped library deliberately has no graph generator.
"""

import sys
import time
from collections import defaultdict
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from locdom.graph import Graph, find_isomorphism, is_connected, _refined_colors
from locdom.graph6 import emit_graph6

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

OUT_DIR = Path(__file__).resolve().parent.parent / "corpora"


def from_networkx(nxg) -> Graph:
    n = nxg.number_of_nodes()
    mapping = {v: i for i, v in enumerate(sorted(nxg.nodes()))}
    return Graph(n, [(mapping[u], mapping[v]) for u, v in nxg.edges()])


def signature(g: Graph):
    return (g.n, g.edge_count(), tuple(sorted(_refined_colors(g))))


def atlas_by_order() -> dict[int, list[Graph]]:
    graphs = defaultdict(list)
    for nxg in nx.graph_atlas_g():
        if nxg.number_of_nodes() == 0:
            continue
        graphs[nxg.number_of_nodes()].append(from_networkx(nxg))
    for n, want in ALL_COUNTS.items():
        got = len(graphs[n])
        assert got == want, f"atlas count mismatch at n={n}: {got} != {want}"
    return graphs


def check_pairwise_noniso(graphs: list[Graph], label: str) -> None:
    buckets = defaultdict(list)
    for g in graphs:
        buckets[signature(g)].append(g)
    for bucket in buckets.values():
        for i, g in enumerate(bucket):
            for h in bucket[i + 1:]:
                assert find_isomorphism(g, h) is None, f"duplicate classes in {label}"


def connected_8(connected_7: list[Graph]) -> list[Graph]:
    """All connected 8-vertex graphs, by one-vertex augmentation + dedup.

    Every connected graph has a non-cut vertex, so deleting it leaves a
    connected graph on one vertex fewer: augmenting the connected 7-vertex
    classes over all nonempty neighborhoods covers every class on 8.
    """
    reps: dict[tuple, list[Graph]] = defaultdict(list)
    found: list[Graph] = []
    t0 = time.time()
    candidates = 0
    for base in connected_7:
        masks = list(base.adj) + [0]
        for nbhd in range(1, 1 << 7):
            candidates += 1
            aug = list(masks)
            aug[7] = nbhd
            m = nbhd
            while m:
                low = m & -m
                aug[low.bit_length() - 1] |= 1 << 7
                m ^= low
            g = Graph.from_adjacency(aug)
            sig = signature(g)
            bucket = reps[sig]
            if not any(find_isomorphism(g, h) is not None for h in bucket):
                bucket.append(g)
                found.append(g)
    elapsed = time.time() - t0
    print(f"  augmented {candidates} candidates -> {len(found)} classes in {elapsed:.1f}s")
    assert len(found) == CONNECTED_COUNTS[8], f"n=8 count {len(found)} != 11117"
    return found


def write_corpus(path: Path, graphs: list[Graph]) -> None:
    lines = sorted(emit_graph6(g) for g in graphs)
    lines.sort(key=lambda s: (ord(s[0]), s))
    path.write_text("\n".join(lines) + "\n")
    print(f"  wrote {path.name}: {len(lines)} graphs")


def main() -> None:
    OUT_DIR.mkdir(exist_ok=True)
    print("loading atlas...")
    atlas = atlas_by_order()
    for n in ALL_COUNTS:
        check_pairwise_noniso(atlas[n], f"atlas n={n}")
    connected = {
        n: [g for g in atlas[n] if is_connected(g)] for n in ALL_COUNTS
    }
    for n in range(1, 8):
        got = len(connected[n])
        assert got == CONNECTED_COUNTS[n], f"connected count mismatch at n={n}: {got}"

    print("generating connected n=8...")
    c8 = connected_8(connected[7])
    check_pairwise_noniso(c8, "generated n=8")

    all_le5 = [g for n in range(1, 6) for g in atlas[n]]
    all_le6 = [g for n in range(1, 7) for g in atlas[n]]
    conn_le7 = [g for n in range(1, 8) for g in connected[n]]
    conn_le8 = conn_le7 + c8

    write_corpus(OUT_DIR / "graphs_le5.g6", all_le5)
    write_corpus(OUT_DIR / "graphs_le6.g6", all_le6)
    write_corpus(OUT_DIR / "connected_le7.g6", conn_le7)
    write_corpus(OUT_DIR / "connected_le8.g6", conn_le8)
    print("done")


if __name__ == "__main__":
    main()
