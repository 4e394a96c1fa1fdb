#!/usr/bin/env python3
"""Regenerates the *.expected.nq files with rdflib (pip install rdflib)."""
import glob
import os

import rdflib

rdflib.NORMALIZE_LITERALS = False
os.chdir(os.path.dirname(os.path.abspath(__file__)))
FORMATS = {"ttl": "turtle", "trig": "trig", "nt": "nt"}
for name in sorted(f for ext in FORMATS for f in glob.glob(f"*.{ext}")):
    ds = rdflib.Dataset(default_union=False)
    ds.parse(name, format=FORMATS[name.rsplit(".", 1)[1]])
    lines = sorted({l for l in ds.serialize(format="nquads").splitlines() if l.strip()})
    with open(name + ".expected.nq", "w", encoding="utf-8") as out:
        out.write("\n".join(lines) + "\n")
