#!/usr/bin/env python3
"""Convert a GML network with a categorical node attribute into an edge list
and a community file (one line per attribute value).

  tools/gml_to_edgelist.py polbooks.gml --attr value \
      --out-graph data/polbooks/polbooks.edges --out-truth data/polbooks/polbooks.truth
"""
import argparse
from collections import defaultdict

import networkx as nx


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("gml")
    ap.add_argument("--attr", default="value", help="node attribute holding the group")
    ap.add_argument("--out-graph", required=True)
    ap.add_argument("--out-truth", required=True)
    args = ap.parse_args()

    g = nx.read_gml(args.gml, label="id")
    with open(args.out_graph, "w") as f:
        for u, v in g.edges():
            if u != v:
                f.write(f"{u} {v}\n")

    groups = defaultdict(list)
    for node, data in g.nodes(data=True):
        if args.attr in data:
            groups[str(data[args.attr])].append(str(node))
    with open(args.out_truth, "w") as f:
        for key in sorted(groups):
            f.write(" ".join(groups[key]) + "\n")


if __name__ == "__main__":
    main()
