#!/usr/bin/env python3
"""Build data/corpus.mgf from nauty geng output plus K_2^3 and flower snarks.

Usage: make_corpus.py --geng PATH --cli PATH [--max-n 14] [--out-dir data]

Simple graphs keep the graph6 edge order (column by column of the upper
triangle), so the MGF block and the graph6 line describe the same indices.
"""

import argparse
import pathlib
import subprocess

import networkx as nx


def mgf_block(name, n, edges):
    lines = [f"# {name}", f"{n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def graph6_edges(line):
    g = nx.from_graph6_bytes(line.encode())
    n = g.number_of_nodes()
    return n, [(i, j) for j in range(1, n) for i in range(j) if g.has_edge(i, j)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--geng", required=True)
    ap.add_argument("--cli", required=True, help="built cubiccover executable")
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--out-dir", default="data")
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    g6_lines = []
    for n in range(4, args.max_n + 1, 2):
        res = subprocess.run([args.geng, "-C", "-d3", "-D3", "-q", str(n)],
                             check=True, capture_output=True, text=True)
        g6_lines += res.stdout.split()
    (out / f"bridgeless_cubic_le{args.max_n}.g6").write_text("\n".join(g6_lines) + "\n")

    blocks = [mgf_block("theta K_2^3", 2, [(0, 1)] * 3)]
    for idx, line in enumerate(g6_lines):
        n, edges = graph6_edges(line)
        blocks.append(mgf_block(f"n{n} {line}", n, edges))
    for t in (5, 7):
        res = subprocess.run([args.cli, "gen", "flower", str(t)],
                             check=True, capture_output=True, text=True)
        blocks.append(f"# flower J{t}\n" + res.stdout)
    (out / "corpus.mgf").write_text("\n".join(blocks))
    print(f"{len(blocks)} graphs")


if __name__ == "__main__":
    main()
