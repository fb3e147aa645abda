"""Cross-checks graph6 output of `construct` against networkx."""

import json
import subprocess
import sys

import networkx as nx

tool = sys.argv[1]


def built(text):
    out = subprocess.run([tool, "construct", text, "--json"], capture_output=True, text=True, check=True)
    doc = json.loads(out.stdout)
    return nx.from_graph6_bytes(doc["graph6"].encode()), doc["descriptor"]


failures = 0
cases = ["g1:20,1,4", "g1:31,2,6", "g2:20,2,1,4", "g2:40,3,2,6", "g3:38,0", "g3:50,2", "h:13,1,4,1", "h:30,2,4,3"]
for text in cases:
    g, d = built(text)
    ok = g.number_of_nodes() == d["n"] and g.number_of_edges() == d["edges_counted"]
    if d["edges_formula"] is not None:
        ok = ok and g.number_of_edges() == d["edges_formula"]
    # Round trip through networkx's encoder.
    again = nx.to_graph6_bytes(g, header=False).decode().strip()
    out = subprocess.run([tool, "check-free", "--graph", again, "--forest", "P2", "--json"],
                         capture_output=True, text=True)
    doc = json.loads(out.stdout)
    ok = ok and doc["n"] == d["n"] and doc["edges"] == g.number_of_edges()
    print(("ok   " if ok else "FAIL ") + text)
    failures += not ok

# G3(n,k) = K_{k+3} v (K2 u Kbar_{n-k-5}): degree sequence is fixed.
g, _ = built("g3:20,1")
degs = sorted(d for _, d in g.degree())
want = sorted([19] * 4 + [5] * 2 + [4] * 14)
print(("ok   " if degs == want else "FAIL ") + "G3(20,1) degree sequence")
failures += degs != want

sys.exit(1 if failures else 0)
